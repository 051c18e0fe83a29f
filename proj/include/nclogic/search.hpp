#pragma once

#include "nclogic/tf_model.hpp"

namespace nclogic {

// raised budget = more models; the default keeps raw enumeration snappy
inline constexpr uint64_t default_budget = 5'000'000;

// reads NCLOGIC_BUDGET when set, else default_budget
uint64_t budget_from_env();

struct SearchResult {
    bool valid = true;  // no countermodel up to the bound
    std::optional<TFModel> countermodel;
    std::map<std::string, std::string> counterassignment;
    uint64_t models_checked = 0;
    uint64_t cases_checked = 0;  // model/assignment pairs
};

// Enumerates every labeled model over `sig` with 1..max_size elements (raw,
// no isomorphism reduction) and every assignment of the free variables,
// looking for a case where all premises are designated but the conclusion is
// not.  Throws BudgetError when the case count would exceed `budget`.
SearchResult consequence_bounded(const Signature& sig,
                                 const std::vector<FormulaPtr>& premises,
                                 const FormulaPtr& conclusion, int max_size,
                                 uint64_t budget);

SearchResult validity_bounded(const Signature& sig, const FormulaPtr& f,
                              int max_size, uint64_t budget);

// case count for one domain size (helper shared with the Tarski search)
uint64_t tf_case_count(const Signature& sig, int size, size_t free_var_count,
                       uint64_t cap);

}  // namespace nclogic
