#pragma once

#include <cstdint>
#include <optional>
#include <variant>

#include "nclogic/formula.hpp"

namespace nclogic {

constexpr int schema_count = 22;

// metavariable bindings for one axiom instance; unused slots stay empty
struct Instantiation {
    FormulaPtr phi, psi, chi;
    std::string x, y;
    std::optional<Term> t;
};

// space-separated metavariable names a schema consumes, e.g. "phi x t"
const char* schema_shape(int id);
// the schema rendered with its metavariable names
const char* schema_statement(int id);

// Builds the concrete axiom instance.  Substitution in schemas 11, 12 and 14
// renames bound variables as needed, so instances are always sound.
// Throws ValidationError when a needed metavariable is missing or id is out
// of range.
FormulaPtr instantiate_schema(int id, const Instantiation& inst);

// justifications; all line and hypothesis references are 1-based
struct AxiomJ { int schema = 0; Instantiation inst; };
struct HypJ { int index = 0; };
struct MPJ { int from = 0, imp = 0; };  // antecedent line, implication line
struct GenImpJ { int from = 0; };       // phi -> psi  gives  phi -> forall x. psi
struct GenExistsJ { int from = 0; };    // phi -> psi  gives  (exists x. phi) -> psi
using Justification = std::variant<AxiomJ, HypJ, MPJ, GenImpJ, GenExistsJ>;

struct ProofLine {
    FormulaPtr claim;
    Justification just;
};

struct Proof {
    Signature sig;
    std::vector<FormulaPtr> hypotheses;
    std::vector<ProofLine> lines;
};

struct ProofVerdict {
    bool ok = true;
    int bad_line = 0;  // 1-based, 0 when ok
    std::string message;
};

// Verifies every line: axiom instances up to renaming of bound variables,
// hypothesis citations, modus ponens, and the two generalization rules with
// their side conditions.  Reports the first bad line.
ProofVerdict check_proof(const Proof& p);

// Rewrites a proof of the last hypothesis delta plus the rest entailing psi
// into a proof of delta -> psi from the rest.  Handles axiom, hypothesis and
// modus ponens lines; throws ValidationError on generalization lines.
Proof discharge_last_hypothesis(const Proof& p);

struct SoundnessReport {
    uint64_t schema_instances = 0;
    uint64_t rule_derivations = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

// Random schema instances evaluated in random models (everything must come
// out designated), plus modus ponens and both generalization rules checked
// to preserve designation on randomly generated premises.
SoundnessReport soundness_harness(int trials, int max_size, uint64_t seed);

}  // namespace nclogic
