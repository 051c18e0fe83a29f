#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "nclogic/universe.hpp"

namespace nclogic {

struct BatteryReport {
    std::string check;
    std::vector<std::pair<std::string, std::string>> params;
    uint64_t cases = 0;
    uint64_t failure_count = 0;
    std::vector<std::string> failures;  // first few, for diagnostics

    bool ok() const { return failure_count == 0; }
    void fail(std::string what) {
        failure_count++;
        if (failures.size() < 10) failures.push_back(std::move(what));
    }
};

nlohmann::json report_to_json(const BatteryReport& r);

// level sizes 0/1/4/256, rank bounds, monotonicity, pruning closure,
// extension operators, and rank-unbounded subset witnesses
BatteryReport verify_levels(Universe& uni);

// the equality axiom sentence over every pair of the level, native clause
// route checked against the evaluator route on a seeded sample
BatteryReport verify_extensionality(Universe& uni, int level, uint64_t seed);

// the six truth-condition laws for subset and equality over every pair
BatteryReport verify_subset_equality_laws(Universe& uni, int level, uint64_t seed);

BatteryReport verify_pairing(Universe& uni, int level, uint64_t seed);
BatteryReport verify_union(Universe& uni, int level, uint64_t seed);
BatteryReport verify_powerset(Universe& uni, int level, uint64_t seed);
BatteryReport verify_classical_superset(Universe& uni, int level, uint64_t seed);

// fixed ten-formula battery, quantified members exercised on smaller inputs
BatteryReport verify_comprehension(Universe& uni, uint64_t seed);

// three extensionally characterized operations: quest-extension,
// bang-extension, classical singleton
BatteryReport verify_replacement(Universe& uni);

// reproduces every classical (u, v) extension pair from the small base plus
// a seeded sample of larger classical pairs
BatteryReport verify_acla(Universe& uni, uint64_t seed);

// four truth values with their names, and the quotation law for a formula
// battery
BatteryReport verify_omega(Universe& uni, uint64_t seed);

// dispatcher: runs the battery for one axiom name (extensionality,
// comprehension, classical-superset, replacement, pairing, powerset, union)
BatteryReport verify_axiom(Universe& uni, const std::string& name, int level,
                           uint64_t seed);
const std::vector<std::string>& axiom_names();

// generated connective tables against the hand-frozen references,
// entry by entry
BatteryReport verify_tables();

// the six always-designated statement schemas: exhaustive bounded validity
// for the propositional ones, exhaustive small models for the substitution
// schema, then seeded first-order instantiations on random models
BatteryReport verify_statements(uint64_t seed);

// calculus soundness as a battery: seeded instances of every schema plus
// rule derivations, all of which must preserve designation
BatteryReport verify_soundness(int trials, int max_size, uint64_t seed);

struct AggregateResult {
    std::vector<BatteryReport> reports;

    bool ok() const {
        for (auto& r : reports) {
            if (!r.ok()) return false;
        }
        return true;
    }
};

// Every battery of the suite in a fixed order, each on fresh state so the
// output is identical for identical seeds.  `jobs` caps parallel workers;
// assembly order does not depend on scheduling.  A battery that throws is
// reported as failed instead of aborting the sweep.  A non-empty `only`
// narrows the sweep to the named batteries, keeping the canonical order;
// unknown names are rejected.
AggregateResult run_all_batteries(uint64_t seed, uint64_t budget, int jobs,
                                  const std::vector<std::string>& only = {});

// the battery names run_all_batteries accepts, in sweep order
std::vector<std::string> battery_names();

nlohmann::json aggregate_to_json(const AggregateResult& agg, uint64_t seed);

}  // namespace nclogic
