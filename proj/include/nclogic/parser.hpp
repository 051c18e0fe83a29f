#pragma once

#include "nclogic/formula.hpp"

namespace nclogic {

// Parses the ASCII formula syntax.  Binding strength, loosest to tightest:
// <=>  =>  <->  ->  |  &  prefix (~ not ! ? o).  The arrow family is
// right-associative, & and | left-associative, and quantifier bodies extend
// maximally to the right.  Atoms: R(t1, ..., tn), t = s, t in s, bot.
// Throws ParseError with a 0-based byte offset on the first problem.
FormulaPtr parse_formula(const std::string& text, const Signature& sig);

// Same grammar, but unknown relation symbols are added to `sig` with the
// arity of their first use (later uses must agree) and undeclared
// identifiers in term position become variables.
FormulaPtr parse_formula_infer(const std::string& text, Signature& sig);

Term parse_term_text(const std::string& text, const Signature& sig);

}  // namespace nclogic
