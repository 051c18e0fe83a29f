// Runs the eleven acceptance checks, one pass/fail line each.  Time limits
// and case floors are pinned here on purpose; a slower or smaller run fails.
#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "nclogic/interpret.hpp"
#include "nclogic/search.hpp"
#include "nclogic/tarski.hpp"
#include "nclogic/universe.hpp"
#include "nclogic/verify.hpp"

using namespace nclogic;

namespace {

struct Outcome {
    bool ok = false;
    uint64_t cases = 0;
    std::string detail;
};

Outcome from_report(const BatteryReport& r, uint64_t case_floor = 0) {
    Outcome o;
    o.ok = r.ok() && r.cases >= case_floor;
    o.cases = r.cases;
    if (!r.ok() && !r.failures.empty()) o.detail = r.failures.front();
    if (r.ok() && r.cases < case_floor)
        o.detail = "only " + std::to_string(r.cases) + " cases, need " +
                   std::to_string(case_floor);
    return o;
}

Outcome merge(std::initializer_list<BatteryReport> reports) {
    Outcome o;
    o.ok = true;
    for (auto& r : reports) {
        o.cases += r.cases;
        if (!r.ok()) {
            o.ok = false;
            if (o.detail.empty() && !r.failures.empty())
                o.detail = r.check + ": " + r.failures.front();
        }
    }
    return o;
}

// stdout bytes and exit code of one command
std::pair<std::string, int> capture(const std::string& cmd) {
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {"", -1};
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    return {out, WIFEXITED(status) ? WEXITSTATUS(status) : -1};
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli = argc > 1 ? argv[1] : "";

    struct Criterion {
        int id;
        const char* label;
        double limit_s;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "truth-table conformance", 1.0,
         [] { return from_report(verify_tables(), 116); }},
        {2, "always-designated statement schemas", 30.0,
         [] { return from_report(verify_statements(0), 500); }},
        {3, "calculus soundness", 60.0,
         [] { return from_report(verify_soundness(1000, 4, 0), 22000 + 3000); }},
        {4, "level cardinalities 0/1/4/256", 1.0,
         [] {
             Universe u;
             Outcome o;
             o.ok = true;
             const size_t want[] = {0, 1, 4, 256};
             for (int n = 0; n <= 3; n++) {
                 o.cases++;
                 if (u.level(n).size() != want[n]) {
                     o.ok = false;
                     o.detail = "level " + std::to_string(n) + " has " +
                                std::to_string(u.level(n).size()) + " sets";
                 }
             }
             return o;
         }},
        {5, "set axiom batteries", 300.0,
         [] {
             Universe u;
             return merge({verify_extensionality(u, 3, 0),
                           verify_subset_equality_laws(u, 3, 0),
                           verify_pairing(u, 3, 0), verify_union(u, 3, 0),
                           verify_powerset(u, 3, 0),
                           verify_classical_superset(u, 3, 0),
                           verify_comprehension(u, 0), verify_replacement(u)});
         }},
        {6, "pair reconstruction from classical donors", 10.0,
         [] {
             Universe u;
             return from_report(verify_acla(u, 0), 116);
         }},
        {7, "truth-value sets and the quotation law", 10.0,
         [] {
             Universe u;
             return from_report(verify_omega(u, 0), 56);
         }},
        {8, "store embeddings and codings", 60.0,
         [] {
             HfUniverse hf;
             Universe u1;
             auto a = verify_check_iso(hf, u1, 4);
             HfUniverse hf2;
             Universe u2;
             auto b = verify_hclw_equals_vcheck(hf2, u2, 3);
             Universe u3;
             auto c = verify_hat_iso(u3, 2);
             Universe u4;
             auto d = verify_w_relativized_to_hcl(u4, 2);
             return merge({a, b, c, d});
         }},
        {9, "model conversion and verdict agreement sweep", 300.0,
         [] { return from_report(roundtrip_report(2, 3, 64, 0), 10000); }},
        {10, "class-separation matrix", 30.0,
         [] { return from_report(verify_class_separation(3, default_budget)); }},
        {11, "one-command sweep, deterministic output", 900.0,
         [&] {
             Outcome o;
             if (cli.empty()) {
                 o.detail = "no sweep binary given on the command line";
                 return o;
             }
             std::string cmd = "\"" + cli + "\" verify-all --json --seed 0 --jobs 4";
             auto first = capture(cmd);
             auto second = capture(cmd);
             o.cases = 2;
             if (first.second != 0)
                 o.detail = "exit code " + std::to_string(first.second);
             else if (first.first != second.first)
                 o.detail = "same-seed runs differ";
             else if (first.first.empty())
                 o.detail = "no output";
             else
                 o.ok = true;
             return o;
         }},
    };

    int passed = 0;
    for (auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("threw: ") + e.what();
        }
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        bool in_time = elapsed <= c.limit_s;
        bool pass = o.ok && in_time;
        passed += pass ? 1 : 0;
        char line[160];
        std::snprintf(line, sizeof line, "%s %2d %-46s %9llu cases  %6.2fs",
                      pass ? "PASS" : "FAIL", c.id, c.label,
                      (unsigned long long)o.cases, elapsed);
        std::cout << line << "\n";
        if (!o.detail.empty()) std::cout << "        " << o.detail << "\n";
        if (o.ok && !in_time)
            std::cout << "        over the " << c.limit_s << "s limit\n";
    }
    std::cout << "acceptance: " << passed << " of " << criteria.size()
              << " criteria passed\n";
    return passed == (int)criteria.size() ? 0 : 1;
}
