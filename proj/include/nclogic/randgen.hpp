#pragma once

#include <random>

#include "nclogic/tf_model.hpp"

namespace nclogic {

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(uint64_t seed) : eng(seed) {}
    uint64_t next(uint64_t bound) { return bound ? eng() % bound : 0; }
    bool coin() { return eng() & 1; }
};

// stable per-case seeds so work can be split without changing results
uint64_t mix_seed(uint64_t base, uint64_t a, uint64_t b);

struct FormulaGenOptions {
    int max_depth = 3;
    bool allow_quantifiers = true;
    bool allow_sugar = true;
    std::vector<std::string> var_pool = {"x", "y", "z"};
};

// free variables come from the pool; callers supply assignments for them
FormulaPtr random_formula(Rng& rng, const Signature& sig, const FormulaGenOptions& opt);

TFModel random_model(Rng& rng, const Signature& sig, int size);

std::map<std::string, std::string> random_assignment(Rng& rng, const TFModel& m,
                                                     const std::set<std::string>& vars);

}  // namespace nclogic
