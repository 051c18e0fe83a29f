#include "nclogic/hilbert.hpp"

#include "nclogic/error.hpp"
#include "nclogic/randgen.hpp"
#include "nclogic/tf_model.hpp"

namespace nclogic {

static const char* shapes[schema_count + 1] = {
    "",
    "phi psi", "phi psi chi", "phi psi", "phi psi", "phi psi", "phi psi",
    "phi psi", "phi psi", "phi psi chi", "phi",
    "phi x t", "phi x t", "x", "phi x y",
    "phi", "phi psi", "phi psi", "phi psi", "",
    "phi x", "phi x", "x y",
};

static const char* statements[schema_count + 1] = {
    "",
    "phi -> (psi -> phi)",
    "(phi -> (psi -> chi)) -> ((phi -> psi) -> (phi -> chi))",
    "phi | (phi -> psi)",
    "(phi & psi) -> phi",
    "(phi & psi) -> psi",
    "phi -> (psi -> (phi & psi))",
    "phi -> (phi | psi)",
    "psi -> (phi | psi)",
    "(phi -> chi) -> ((psi -> chi) -> ((phi | psi) -> chi))",
    "bot -> phi",
    "(forall x. phi) -> phi[x := t]",
    "phi[x := t] -> (exists x. phi)",
    "x = x",
    "x = y -> (phi -> phi[x := y])",
    "~~phi <-> phi",
    "~(phi & psi) <-> (~phi | ~psi)",
    "~(phi | psi) <-> (~phi & ~psi)",
    "~(phi -> psi) <-> (phi & ~psi)",
    "~bot",
    "~(forall x. phi) <-> (exists x. ~phi)",
    "~(exists x. phi) <-> (forall x. ~phi)",
    "~(x = y) -> ~(y = x)",
};

static void check_id(int id) {
    if (id < 1 || id > schema_count)
        throw ValidationError("axiom id out of range 1..22: " + std::to_string(id));
}

const char* schema_shape(int id) {
    check_id(id);
    return shapes[id];
}

const char* schema_statement(int id) {
    check_id(id);
    return statements[id];
}

FormulaPtr instantiate_schema(int id, const Instantiation& in) {
    check_id(id);
    auto miss = [&](const char* slot) {
        return ValidationError("axiom " + std::to_string(id) + " (" + statements[id] +
                               ") needs metavariable \"" + slot + "\"");
    };
    auto F = [&](const FormulaPtr& f, const char* slot) {
        if (!f) throw miss(slot);
        return f;
    };
    auto V = [&](const std::string& v, const char* slot) {
        if (v.empty()) throw miss(slot);
        if (reserved_word(v))
            throw ValidationError("axiom " + std::to_string(id) +
                                  ": reserved word \"" + v + "\" cannot be a variable");
        return v;
    };
    auto T = [&]() {
        if (!in.t) throw miss("t");
        return *in.t;
    };
    const auto& [phi, psi, chi, x, y, t] = in;
    using Fm = Formula;
    switch (id) {
        case 1: return Fm::imp(F(phi, "phi"), Fm::imp(F(psi, "psi"), phi));
        case 2:
            return Fm::imp(Fm::imp(F(phi, "phi"), Fm::imp(F(psi, "psi"), F(chi, "chi"))),
                           Fm::imp(Fm::imp(phi, psi), Fm::imp(phi, chi)));
        case 3: return Fm::disj(F(phi, "phi"), Fm::imp(phi, F(psi, "psi")));
        case 4: return Fm::imp(Fm::conj(F(phi, "phi"), F(psi, "psi")), phi);
        case 5: return Fm::imp(Fm::conj(F(phi, "phi"), F(psi, "psi")), psi);
        case 6: return Fm::imp(F(phi, "phi"), Fm::imp(F(psi, "psi"), Fm::conj(phi, psi)));
        case 7: return Fm::imp(F(phi, "phi"), Fm::disj(phi, F(psi, "psi")));
        case 8: return Fm::imp(F(psi, "psi"), Fm::disj(F(phi, "phi"), psi));
        case 9:
            return Fm::imp(Fm::imp(F(phi, "phi"), F(chi, "chi")),
                           Fm::imp(Fm::imp(F(psi, "psi"), chi),
                                   Fm::imp(Fm::disj(phi, psi), chi)));
        case 10: return Fm::imp(Fm::bot(), F(phi, "phi"));
        case 11:
            return Fm::imp(Fm::forall(V(x, "x"), F(phi, "phi")), substitute(phi, x, T()));
        case 12:
            return Fm::imp(substitute(F(phi, "phi"), V(x, "x"), T()), Fm::exists(x, phi));
        case 13: return Fm::eq(var(V(x, "x")), var(x));
        case 14:
            return Fm::imp(Fm::eq(var(V(x, "x")), var(V(y, "y"))),
                           Fm::imp(F(phi, "phi"), substitute(phi, x, var(y))));
        case 15: return Fm::iff(Fm::neg(Fm::neg(F(phi, "phi"))), phi);
        case 16:
            return Fm::iff(Fm::neg(Fm::conj(F(phi, "phi"), F(psi, "psi"))),
                           Fm::disj(Fm::neg(phi), Fm::neg(psi)));
        case 17:
            return Fm::iff(Fm::neg(Fm::disj(F(phi, "phi"), F(psi, "psi"))),
                           Fm::conj(Fm::neg(phi), Fm::neg(psi)));
        case 18:
            return Fm::iff(Fm::neg(Fm::imp(F(phi, "phi"), F(psi, "psi"))),
                           Fm::conj(phi, Fm::neg(psi)));
        case 19: return Fm::neg(Fm::bot());
        case 20:
            return Fm::iff(Fm::neg(Fm::forall(V(x, "x"), F(phi, "phi"))),
                           Fm::exists(x, Fm::neg(phi)));
        case 21:
            return Fm::iff(Fm::neg(Fm::exists(V(x, "x"), F(phi, "phi"))),
                           Fm::forall(x, Fm::neg(phi)));
        case 22:
            return Fm::imp(Fm::neg(Fm::eq(var(V(x, "x")), var(V(y, "y")))),
                           Fm::neg(Fm::eq(var(y), var(x))));
    }
    return nullptr;  // unreachable, check_id covers it
}

ProofVerdict check_proof(const Proof& p) {
    auto bad = [](int line, std::string msg) {
        return ProofVerdict{false, line, std::move(msg)};
    };
    if (p.lines.empty()) return bad(0, "proof has no lines");
    std::string sig_issue = p.sig.check();
    if (!sig_issue.empty()) return bad(0, sig_issue);

    for (size_t i = 0; i < p.lines.size(); i++) {
        int n = (int)i + 1;
        const auto& line = p.lines[i];
        if (!line.claim) return bad(n, "line has no formula");

        auto earlier = [&](int ref, const char* what) -> std::string {
            if (ref < 1) return std::string(what) + " reference must be positive";
            if (ref > (int)i)
                return std::string(what) + " reference " + std::to_string(ref) +
                       " is not an earlier line";
            return "";
        };

        if (auto* ax = std::get_if<AxiomJ>(&line.just)) {
            FormulaPtr want;
            try {
                want = instantiate_schema(ax->schema, ax->inst);
            } catch (const ValidationError& e) {
                return bad(n, e.what());
            }
            if (!alpha_equal(want, line.claim))
                return bad(n, "formula is not the cited instance of axiom " +
                                  std::to_string(ax->schema) + ": expected " + render(want));
        } else if (auto* hy = std::get_if<HypJ>(&line.just)) {
            if (hy->index < 1 || hy->index > (int)p.hypotheses.size())
                return bad(n, "hypothesis index " + std::to_string(hy->index) +
                                  " out of range 1.." + std::to_string(p.hypotheses.size()));
            if (!alpha_equal(p.hypotheses[hy->index - 1], line.claim))
                return bad(n, "formula differs from hypothesis " + std::to_string(hy->index));
        } else if (auto* mp = std::get_if<MPJ>(&line.just)) {
            for (auto [ref, what] : {std::pair{mp->from, "antecedent"},
                                     std::pair{mp->imp, "implication"}}) {
                auto msg = earlier(ref, what);
                if (!msg.empty()) return bad(n, msg);
            }
            const auto& a = p.lines[mp->from - 1].claim;
            const auto& im = p.lines[mp->imp - 1].claim;
            if (im->kind != FKind::Imp)
                return bad(n, "line " + std::to_string(mp->imp) + " is not an implication");
            if (!alpha_equal(im->lhs, a))
                return bad(n, "line " + std::to_string(mp->from) +
                                  " does not match the antecedent of line " +
                                  std::to_string(mp->imp));
            if (!alpha_equal(im->rhs, line.claim))
                return bad(n, "formula differs from the consequent of line " +
                                  std::to_string(mp->imp));
        } else if (auto* gi = std::get_if<GenImpJ>(&line.just)) {
            auto msg = earlier(gi->from, "premise");
            if (!msg.empty()) return bad(n, msg);
            const auto& prem = p.lines[gi->from - 1].claim;
            if (prem->kind != FKind::Imp)
                return bad(n, "premise of the forall rule must be an implication");
            if (line.claim->kind != FKind::Imp || line.claim->rhs->kind != FKind::Forall)
                return bad(n, "conclusion of the forall rule must end in a universal");
            const std::string& v = line.claim->rhs->name;
            if (!alpha_equal(line.claim->lhs, prem->lhs))
                return bad(n, "antecedent differs from line " + std::to_string(gi->from));
            if (!alpha_equal(line.claim->rhs->lhs, prem->rhs))
                return bad(n, "quantified body differs from the consequent of line " +
                                  std::to_string(gi->from));
            if (free_vars(prem->lhs).count(v))
                return bad(n, "side condition violated: \"" + v +
                                  "\" occurs free in the antecedent");
        } else if (auto* ge = std::get_if<GenExistsJ>(&line.just)) {
            auto msg = earlier(ge->from, "premise");
            if (!msg.empty()) return bad(n, msg);
            const auto& prem = p.lines[ge->from - 1].claim;
            if (prem->kind != FKind::Imp)
                return bad(n, "premise of the exists rule must be an implication");
            if (line.claim->kind != FKind::Imp || line.claim->lhs->kind != FKind::Exists)
                return bad(n, "conclusion of the exists rule must start with an existential");
            const std::string& v = line.claim->lhs->name;
            if (!alpha_equal(line.claim->lhs->lhs, prem->lhs))
                return bad(n, "quantified body differs from the antecedent of line " +
                                  std::to_string(ge->from));
            if (!alpha_equal(line.claim->rhs, prem->rhs))
                return bad(n, "consequent differs from line " + std::to_string(ge->from));
            if (free_vars(prem->rhs).count(v))
                return bad(n, "side condition violated: \"" + v +
                                  "\" occurs free in the consequent");
        }
    }
    return {};
}

Proof discharge_last_hypothesis(const Proof& p) {
    if (p.hypotheses.empty())
        throw ValidationError("no hypothesis to discharge");
    FormulaPtr delta = p.hypotheses.back();
    int last_hyp = (int)p.hypotheses.size();

    Proof out;
    out.sig = p.sig;
    out.hypotheses.assign(p.hypotheses.begin(), p.hypotheses.end() - 1);

    // new 1-based index of delta -> claim for each original line
    std::vector<int> at(p.lines.size() + 1, 0);
    int delta_to_delta = 0;

    auto push = [&](FormulaPtr f, Justification j) {
        out.lines.push_back({std::move(f), std::move(j)});
        return (int)out.lines.size();
    };
    auto lift = [&](int orig, FormulaPtr claim, Justification j) {
        // claim by its own justification, then ax1 and modus ponens
        int base = push(claim, std::move(j));
        Instantiation ax1{claim, delta, nullptr, "", "", std::nullopt};
        int imp = push(instantiate_schema(1, ax1), AxiomJ{1, ax1});
        at[orig] = push(Formula::imp(delta, claim), MPJ{base, imp});
    };

    for (size_t i = 0; i < p.lines.size(); i++) {
        int n = (int)i + 1;
        const auto& line = p.lines[i];
        if (auto* hy = std::get_if<HypJ>(&line.just); hy && hy->index == last_hyp) {
            if (delta_to_delta == 0) {
                // delta -> delta from axioms 1 and 2
                auto dd = Formula::imp(delta, delta);
                Instantiation a1{delta, dd, nullptr, "", "", std::nullopt};
                int s1 = push(instantiate_schema(1, a1), AxiomJ{1, a1});
                Instantiation a2{delta, dd, delta, "", "", std::nullopt};
                int s2 = push(instantiate_schema(2, a2), AxiomJ{2, a2});
                int s3 = push(Formula::imp(Formula::imp(delta, dd), dd), MPJ{s1, s2});
                Instantiation a1b{delta, delta, nullptr, "", "", std::nullopt};
                int s4 = push(instantiate_schema(1, a1b), AxiomJ{1, a1b});
                delta_to_delta = push(dd, MPJ{s4, s3});
            }
            at[n] = delta_to_delta;
        } else if (std::holds_alternative<AxiomJ>(line.just) ||
                   std::holds_alternative<HypJ>(line.just)) {
            lift(n, line.claim, line.just);
        } else if (auto* mp = std::get_if<MPJ>(&line.just)) {
            // delta -> a and delta -> (a -> b) combine through axiom 2
            const auto& a = p.lines[mp->from - 1].claim;
            Instantiation a2{delta, a, line.claim, "", "", std::nullopt};
            int s1 = push(instantiate_schema(2, a2), AxiomJ{2, a2});
            int s2 = push(Formula::imp(Formula::imp(delta, a), Formula::imp(delta, line.claim)),
                          MPJ{at[mp->imp], s1});
            at[n] = push(Formula::imp(delta, line.claim), MPJ{at[mp->from], s2});
        } else {
            throw ValidationError(
                "discharge supports axiom, hypothesis and modus ponens lines only");
        }
    }
    return out;
}

SoundnessReport soundness_harness(int trials, int max_size, uint64_t seed) {
    if (trials < 1) throw ValidationError("trials must be positive");
    if (max_size < 1 || max_size > 4) throw ValidationError("model size must be 1..4");

    Signature sig;
    sig.relations = {{"p", 0}, {"q", 0}, {"R", 1}, {"S", 2}};
    sig.constants = {"c", "d"};
    FormulaGenOptions opt;
    opt.max_depth = 2;
    opt.var_pool = {"x", "y", "z"};

    SoundnessReport rep;
    auto fail = [&](std::string what) {
        if (rep.failures.size() < 20) rep.failures.push_back(std::move(what));
    };

    for (int id = 1; id <= schema_count; id++) {
        for (int k = 0; k < trials; k++) {
            Rng rng(mix_seed(seed, (uint64_t)id, (uint64_t)k));
            Instantiation inst;
            inst.phi = random_formula(rng, sig, opt);
            inst.psi = random_formula(rng, sig, opt);
            inst.chi = random_formula(rng, sig, opt);
            inst.x = opt.var_pool[rng.next(opt.var_pool.size())];
            do {
                inst.y = opt.var_pool[rng.next(opt.var_pool.size())];
            } while (inst.y == inst.x);
            inst.t = rng.coin() ? var(opt.var_pool[rng.next(opt.var_pool.size())])
                                : cons(rng.coin() ? "c" : "d");
            auto f = instantiate_schema(id, inst);
            TFModel m = random_model(rng, sig, 1 + (int)rng.next(max_size));
            auto asg = random_assignment(rng, m, free_vars(f));
            if (!eval(m, f, asg).designated())
                fail("axiom " + std::to_string(id) + " instance not designated: " + render(f));
            rep.schema_instances++;
        }
    }

    // rules: premises designated must force the conclusion designated
    int derivations = 0;
    for (uint64_t k = 0; derivations < 3 * trials && k < 300u * (uint64_t)trials; k++) {
        Rng rng(mix_seed(seed ^ 0x9e3779b97f4a7c15ull, k, 0));
        TFModel m = random_model(rng, sig, 1 + (int)rng.next(max_size));
        auto a = random_formula(rng, sig, opt);
        auto b = random_formula(rng, sig, opt);
        switch (k % 3) {
            case 0: {  // modus ponens at a single valuation
                auto imp = Formula::imp(a, b);
                auto asg = random_assignment(rng, m, free_vars(Formula::conj(a, imp)));
                if (!eval(m, a, asg).designated() || !eval(m, imp, asg).designated()) continue;
                if (!eval(m, b, asg).designated())
                    fail("modus ponens broke designation on " + render(imp));
                derivations++;
                break;
            }
            case 1: {  // forall introduction on the consequent
                std::string x = "x";
                if (free_vars(a).count(x)) a = Formula::forall(x, a);
                auto prem = Formula::imp(a, b);
                if (!designated_everywhere(m, prem)) continue;
                if (!designated_everywhere(m, Formula::imp(a, Formula::forall(x, b))))
                    fail("forall rule broke designation on " + render(prem));
                derivations++;
                break;
            }
            default: {  // exists introduction on the antecedent
                std::string x = "x";
                if (free_vars(b).count(x)) b = Formula::forall(x, b);
                auto prem = Formula::imp(a, b);
                if (!designated_everywhere(m, prem)) continue;
                if (!designated_everywhere(m, Formula::imp(Formula::exists(x, a), b)))
                    fail("exists rule broke designation on " + render(prem));
                derivations++;
                break;
            }
        }
    }
    rep.rule_derivations = (uint64_t)derivations;
    return rep;
}

}  // namespace nclogic
