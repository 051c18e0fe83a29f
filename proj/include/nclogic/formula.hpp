#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace nclogic {

enum class TermKind { Variable, Constant };

struct Term {
    TermKind kind = TermKind::Variable;
    std::string name;

    bool operator==(const Term&) const = default;
    auto operator<=>(const Term&) const = default;
};

inline Term var(std::string name) { return {TermKind::Variable, std::move(name)}; }
inline Term cons(std::string name) { return {TermKind::Constant, std::move(name)}; }

// Relation symbols with arities (>= 0) plus constant symbols.  Relation,
// constant and variable names share one namespace and must not collide;
// `forall exists in bot not o` are reserved words.
struct Signature {
    std::map<std::string, int> relations;
    std::set<std::string> constants;

    // empty string when well formed, else a description of the first problem
    std::string check() const;
};

bool reserved_word(const std::string& s);

enum class FKind {
    Atom, Eq, Bot,                                     // atomic
    Neg, And, Or, Imp, Iff, Forall, Exists,            // primitive connectives
    StrongImp, StrongIff, ClassNeg, Bang, Quest, Circ  // defined connectives
};

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

class Formula {
public:
    FKind kind;
    std::string name;        // Atom: relation symbol; Forall/Exists: bound variable
    std::vector<Term> args;  // Atom arguments; Eq holds exactly two
    FormulaPtr lhs, rhs;     // binary connectives; unary ones use lhs only

    static FormulaPtr atom(std::string rel, std::vector<Term> args);
    static FormulaPtr eq(Term a, Term b);
    static FormulaPtr bot();
    static FormulaPtr neg(FormulaPtr a);
    static FormulaPtr conj(FormulaPtr a, FormulaPtr b);
    static FormulaPtr disj(FormulaPtr a, FormulaPtr b);
    static FormulaPtr imp(FormulaPtr a, FormulaPtr b);
    static FormulaPtr iff(FormulaPtr a, FormulaPtr b);
    static FormulaPtr forall(std::string v, FormulaPtr body);
    static FormulaPtr exists(std::string v, FormulaPtr body);
    static FormulaPtr strong_imp(FormulaPtr a, FormulaPtr b);
    static FormulaPtr strong_iff(FormulaPtr a, FormulaPtr b);
    static FormulaPtr class_neg(FormulaPtr a);
    static FormulaPtr bang(FormulaPtr a);
    static FormulaPtr quest(FormulaPtr a);
    static FormulaPtr circ(FormulaPtr a);
};

bool is_quantifier(FKind k);
bool is_unary(FKind k);
bool is_binary(FKind k);

bool equal(const FormulaPtr& a, const FormulaPtr& b);        // structural
bool alpha_equal(const FormulaPtr& a, const FormulaPtr& b);  // up to bound renaming

std::set<std::string> free_vars(const FormulaPtr& f);
bool is_closed(const FormulaPtr& f);

// replaces free occurrences of `x` by `t`, renaming bound variables (by
// appending primes) whenever `t` would otherwise be captured
FormulaPtr substitute(const FormulaPtr& f, const std::string& x, const Term& t);

// expands the six defined connectives into the primitive ones; idempotent
FormulaPtr desugar(const FormulaPtr& f);
bool sugar_free(const FormulaPtr& f);

std::string render(const Term& t);
std::string render(const FormulaPtr& f);

}  // namespace nclogic
