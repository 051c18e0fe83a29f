#include <algorithm>
#include <atomic>
#include <cstring>
#include <functional>
#include <thread>

#include "nclogic/error.hpp"
#include "nclogic/hilbert.hpp"
#include "nclogic/interpret.hpp"
#include "nclogic/parser.hpp"
#include "nclogic/randgen.hpp"
#include "nclogic/search.hpp"
#include "nclogic/tarski.hpp"
#include "nclogic/verify.hpp"

namespace nclogic {

// Frozen references, row-major over the value order 1, b, n, 0.  These are
// transcribed by hand and must never be generated.
namespace {
struct TableRow {
    const char* conn;
    const char* want;
};
const TableRow table_rows[] = {
    {"neg", "0bn1"},
    {"and", "1bn0" "bb00" "n0n0" "0000"},
    {"or", "1111" "1b1b" "11nn" "1bn0"},
    {"imp", "1bn0" "1bn0" "1111" "1111"},
    {"iff", "1bn0" "bbn0" "nn11" "0011"},
    {"cneg", "0011"},
    {"bang", "1100"},
    {"quest", "1010"},
    {"circ", "1001"},
    {"simp", "10n0" "1bn0" "1n1n" "1111"},
    {"siff", "10n0" "0bn0" "nn1n" "00n1"},
};
}  // namespace

BatteryReport verify_tables() {
    BatteryReport rep{"tables"};
    for (auto& row : table_rows) {
        auto got = truth_table(row.conn);
        if (got.size() != std::strlen(row.want)) {
            rep.fail(std::string("table ") + row.conn + " has " +
                     std::to_string(got.size()) + " entries, want " +
                     std::to_string(std::strlen(row.want)));
            continue;
        }
        for (size_t i = 0; i < got.size(); i++) {
            rep.cases++;
            if (got[i].name()[0] != row.want[i])
                rep.fail(std::string("table ") + row.conn + " entry " + std::to_string(i) +
                         ": got " + got[i].name() + ", want " + row.want[i]);
        }
    }
    return rep;
}

BatteryReport verify_statements(uint64_t seed) {
    BatteryReport rep{"statements"};
    rep.params = {{"seed", std::to_string(seed)}};
    uint64_t budget = 5'000'000;

    // builders for the five propositional schemas
    using Builder = FormulaPtr (*)(FormulaPtr, FormulaPtr);
    const Builder schemas[] = {
        [](FormulaPtr a, FormulaPtr) { return Formula::iff(a, Formula::bang(a)); },
        [](FormulaPtr a, FormulaPtr) {
            return Formula::iff(Formula::neg(a), Formula::neg(Formula::quest(a)));
        },
        [](FormulaPtr a, FormulaPtr) {
            return Formula::imp(Formula::circ(a),
                                Formula::conj(Formula::strong_iff(a, Formula::bang(a)),
                                              Formula::strong_iff(a, Formula::quest(a))));
        },
        [](FormulaPtr a, FormulaPtr) {
            return Formula::imp(Formula::circ(a),
                                Formula::strong_iff(Formula::neg(a), Formula::class_neg(a)));
        },
        [](FormulaPtr a, FormulaPtr b) {
            return Formula::imp(Formula::conj(Formula::circ(a), Formula::circ(b)),
                                Formula::strong_iff(Formula::imp(a, b),
                                                    Formula::strong_imp(a, b)));
        },
    };
    auto substitution_schema = [](const FormulaPtr& phi) {
        return Formula::imp(Formula::eq(var("x"), var("y")),
                            Formula::strong_iff(phi, substitute(phi, "x", var("y"))));
    };

    // exhaustive propositional valuations, swept as bounded validity
    Signature prop;
    prop.relations = {{"p", 0}, {"q", 0}};
    FormulaPtr p = Formula::atom("p", {}), q = Formula::atom("q", {});
    for (auto& schema : schemas) {
        FormulaPtr f = schema(p, q);
        auto res = validity_bounded(prop, f, 3, budget);
        rep.cases += res.cases_checked;
        if (!res.valid) rep.fail("refuted propositionally: " + render(f));
    }

    // the substitution schema over every small unary model
    Signature un;
    un.relations = {{"R", 1}};
    for (const char* body : {"R(x)", "~R(x)", "!R(x)", "R(x) & R(y)", "x = y",
                             "forall z. (R(z) -> R(x))"}) {
        FormulaPtr f = substitution_schema(parse_formula(body, un));
        auto res = validity_bounded(un, f, 2, budget);
        rep.cases += res.cases_checked;
        if (!res.valid) rep.fail("substitution schema refuted for body " + std::string(body));
    }

    // seeded first-order instantiations on random models
    Signature sig;
    sig.relations = {{"R", 1}, {"S", 2}};
    Rng rng(seed);
    FormulaGenOptions opt;
    for (int s = 0; s < 500; s++) {
        FormulaPtr a = random_formula(rng, sig, opt);
        FormulaPtr b = random_formula(rng, sig, opt);
        FormulaPtr f =
            s % 6 < 5 ? schemas[s % 6](a, b) : substitution_schema(a);
        TFModel m = random_model(rng, sig, 1 + (int)rng.next(3));
        auto asg = random_assignment(rng, m, free_vars(f));
        rep.cases++;
        if (!eval(m, f, asg).designated())
            rep.fail("instantiation " + std::to_string(s) + " not designated: " + render(f));
    }
    return rep;
}

BatteryReport verify_soundness(int trials, int max_size, uint64_t seed) {
    BatteryReport rep{"soundness"};
    rep.params = {{"trials", std::to_string(trials)},
                  {"max_size", std::to_string(max_size)},
                  {"seed", std::to_string(seed)}};
    SoundnessReport s = soundness_harness(trials, max_size, seed);
    rep.cases = s.schema_instances + s.rule_derivations;
    for (auto& f : s.failures) rep.fail(f);
    return rep;
}

namespace {
using Job = std::pair<const char*, std::function<BatteryReport()>>;

std::vector<Job> battery_list(uint64_t seed, uint64_t budget) {
    return {
        {"tables", [] { return verify_tables(); }},
        {"statements", [=] { return verify_statements(seed); }},
        {"soundness", [=] { return verify_soundness(1000, 4, seed); }},
        {"levels",
         [] {
             Universe u;
             return verify_levels(u);
         }},
        {"extensionality",
         [=] {
             Universe u;
             return verify_extensionality(u, 3, seed);
         }},
        {"subset-equality-laws",
         [=] {
             Universe u;
             return verify_subset_equality_laws(u, 3, seed);
         }},
        {"pairing",
         [=] {
             Universe u;
             return verify_pairing(u, 3, seed);
         }},
        {"union",
         [=] {
             Universe u;
             return verify_union(u, 3, seed);
         }},
        {"powerset",
         [=] {
             Universe u;
             return verify_powerset(u, 3, seed);
         }},
        {"classical-superset",
         [=] {
             Universe u;
             return verify_classical_superset(u, 3, seed);
         }},
        {"comprehension",
         [=] {
             Universe u;
             return verify_comprehension(u, seed);
         }},
        {"replacement",
         [] {
             Universe u;
             return verify_replacement(u);
         }},
        {"classical-pair-reconstruction",
         [=] {
             Universe u;
             return verify_acla(u, seed);
         }},
        {"truth-value-sets",
         [=] {
             Universe u;
             return verify_omega(u, seed);
         }},
        {"doubling-embedding-iso",
         [] {
             HfUniverse hf;
             Universe u;
             return verify_check_iso(hf, u, 4);
         }},
        {"classical-core",
         [] {
             HfUniverse hf;
             Universe u;
             return verify_hclw_equals_vcheck(hf, u, 3);
         }},
        {"pair-coding-iso",
         [] {
             Universe u;
             return verify_hat_iso(u, 2);
         }},
        {"coded-levels",
         [] {
             Universe u;
             return verify_w_relativized_to_hcl(u, 2);
         }},
        {"tarski-correspondence", [=] { return roundtrip_report(2, 3, 64, seed); }},
        {"class-separation", [=] { return verify_class_separation(3, budget); }},
    };
}
}  // namespace

std::vector<std::string> battery_names() {
    std::vector<std::string> names;
    for (auto& job : battery_list(0, 0)) names.emplace_back(job.first);
    return names;
}

AggregateResult run_all_batteries(uint64_t seed, uint64_t budget, int jobs,
                                  const std::vector<std::string>& only) {
    if (jobs < 1) throw ValidationError("jobs must be at least 1");
    std::vector<Job> list = battery_list(seed, budget);
    if (!only.empty()) {
        for (auto& name : only) {
            bool known = false;
            for (auto& job : list) known = known || name == job.first;
            if (!known) throw ValidationError("no battery named \"" + name + "\"");
        }
        std::vector<Job> kept;
        for (auto& job : list)
            if (std::find(only.begin(), only.end(), job.first) != only.end())
                kept.push_back(std::move(job));
        list = std::move(kept);
    }

    AggregateResult agg;
    agg.reports.resize(list.size());
    std::atomic<size_t> cursor{0};
    auto worker = [&] {
        while (true) {
            size_t i = cursor.fetch_add(1);
            if (i >= list.size()) return;
            try {
                agg.reports[i] = list[i].second();
            } catch (const std::exception& e) {
                agg.reports[i] = BatteryReport{list[i].first};
                agg.reports[i].fail(std::string("battery threw: ") + e.what());
            }
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        size_t count = std::min((size_t)jobs, list.size());
        for (size_t i = 0; i < count; i++) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return agg;
}

nlohmann::json aggregate_to_json(const AggregateResult& agg, uint64_t seed) {
    nlohmann::json arr = nlohmann::json::array();
    uint64_t cases = 0, failures = 0;
    for (auto& r : agg.reports) {
        arr.push_back(report_to_json(r));
        cases += r.cases;
        failures += r.failure_count;
    }
    return nlohmann::json{{"seed", seed},
                          {"ok", agg.ok()},
                          {"cases", cases},
                          {"failure_count", failures},
                          {"batteries", arr}};
}

}  // namespace nclogic
