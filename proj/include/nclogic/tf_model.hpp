#pragma once

#include <optional>

#include "nclogic/formula.hpp"
#include "nclogic/truth_value.hpp"

namespace nclogic {

// A relation interpretation: independent positive and negative extensions,
// stored as |domain|^arity bit rows (row-major tuple encoding).
struct TFRel {
    int arity = 0;
    std::vector<bool> pos, neg;

    bool operator==(const TFRel&) const = default;
};

// A finite model with twin extensions per relation and a negative extension
// for equality (positive equality is literal identity of elements).
struct TFModel {
    std::vector<std::string> domain;
    std::map<std::string, std::string> constants;  // constant symbol -> element
    std::map<std::string, TFRel> relations;
    std::vector<bool> eq_neg;  // |domain|^2 bits, symmetric

    size_t size() const { return domain.size(); }
    int index_of(const std::string& elem) const;

    // all-empty interpretations over the given domain
    static TFModel blank(const Signature& sig, std::vector<std::string> domain);

    bool operator==(const TFModel&) const = default;
};

// empty string when the model fits the signature, else the first violation
std::string validate(const TFModel& m, const Signature& sig);

// variable environment for evaluation; later bindings shadow earlier ones
using VarEnv = std::vector<std::pair<std::string, int>>;

// twin truth/falsity recursion; defined connectives are computed by their
// defining value combinations (the tests pin agreement with full expansion)
TruthValue eval(const TFModel& m, const FormulaPtr& f, VarEnv& env);
TruthValue eval(const TFModel& m, const FormulaPtr& f,
                const std::map<std::string, std::string>& assignment = {});

// designated under every assignment of the free variables
bool designated_everywhere(const TFModel& m, const FormulaPtr& f);

// Truth table of a connective, computed by evaluating it over nullary atoms
// forced to each value.  Row/column order 1, b, n, 0; binary tables are
// row-major (16 entries), unary ones have 4.
// Names: neg and or imp iff simp siff cneg bang quest circ (not = cneg).
std::vector<TruthValue> truth_table(const std::string& connective);
bool connective_is_binary(const std::string& connective);
bool known_connective(const std::string& connective);

}  // namespace nclogic
