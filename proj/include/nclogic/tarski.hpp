#pragma once

#include <array>
#include <optional>

#include "nclogic/tf_model.hpp"
#include "nclogic/verify.hpp"

namespace nclogic {

// A relation interpreted by a four-valued verdict per tuple (row-major).
struct FVRel {
    int arity = 0;
    std::vector<TruthValue> values;

    bool operator==(const FVRel&) const = default;
};

// A model whose satisfaction relation is computed in the four-valued meta:
// the domain is a sharp finite set, but atomic facts may be glutted or
// gapped.  Equality is true exactly between identical elements; diseq holds
// its independent falsity side, so a = a can be both true and false, and
// a = b for distinct a, b can be neither.
struct FVTarskiModel {
    std::vector<std::string> domain;
    std::map<std::string, std::string> constants;  // constant symbol -> element
    std::map<std::string, FVRel> relations;
    std::vector<bool> diseq;  // |domain|^2 bits, symmetric

    size_t size() const { return domain.size(); }
    int index_of(const std::string& elem) const;

    // every relation fully gapped, no disequalities
    static FVTarskiModel blank(const Signature& sig, std::vector<std::string> domain);

    bool operator==(const FVTarskiModel&) const = default;
};

// empty string when the model fits the signature, else the first violation
std::string validate(const FVTarskiModel& m, const Signature& sig);

// The verdict of the satisfaction statement itself: atoms read their value
// from the model, each connective acts on whole verdicts through its value
// table, and quantifiers fold their instances with the conjunction or
// disjunction action.  This recursion never splits a verdict into separate
// truth and falsity questions, which is exactly where it differs from the
// twin-extension evaluator.
TruthValue tarski_value(const FVTarskiModel& m, const FormulaPtr& f, VarEnv& env);
TruthValue tarski_value(const FVTarskiModel& m, const FormulaPtr& f,
                        const std::map<std::string, std::string>& assignment = {});

// the twin-extension reading of the same interpretations: the positive part
// collects asserted tuples (truth bit), the negative part refuted ones
// (falsity bit), and diseq becomes the negative equality extension
TFModel to_tf(const FVTarskiModel& m);

// packs the twin bits of every tuple back into one verdict and rewires the
// negative equality extension as disequality; inverse of to_tf
FVTarskiModel from_tf(const TFModel& n);

// How much non-classicality the interpretations may carry.  ConsistentOnly
// bans gluts (value b, self-disequality), CompleteOnly bans gaps (value n,
// distinct elements missing from diseq), Classical bans both.
enum class ModelClass { Full, ConsistentOnly, CompleteOnly, Classical };

inline constexpr std::array<ModelClass, 4> model_classes{
    ModelClass::Full, ModelClass::ConsistentOnly, ModelClass::CompleteOnly,
    ModelClass::Classical};

const char* model_class_name(ModelClass cls);
bool model_class_from_name(const std::string& s, ModelClass& out);
bool in_class(const FVTarskiModel& m, ModelClass cls);

// number of labeled models of the class at exactly this domain size,
// saturating just above `cap` (mirrors tf_case_count)
uint64_t tarski_case_count(const Signature& sig, int size, ModelClass cls,
                           uint64_t cap);

struct TarskiSearchResult {
    bool valid = true;  // designated in every enumerated model
    std::optional<FVTarskiModel> countermodel;
    uint64_t models_checked = 0;
};

// Enumerates every labeled model of the class with 1..max_size elements and
// tests whether the satisfaction verdict of the sentence stays designated.
// Throws ValidationError on open formulas and BudgetError when the model
// count would exceed `budget`.
TarskiSearchResult classify_validity(const Signature& sig, const FormulaPtr& f,
                                     ModelClass cls, int max_size, uint64_t budget);

// the signature the correspondence sweep runs over: one unary R, one
// binary S, no constants
Signature tarski_battery_signature();

// Deterministic formula battery over that signature: all eleven connectives
// and both quantifiers appear at every nesting level up to `depth`, with
// free variables drawn from {x, y}.  Duplicates are pruned; order is fixed.
std::vector<FormulaPtr> tarski_battery(int depth);

// The correspondence sweep: over every model with up to max_size elements,
// both conversions round trip identically, and on every battery formula
// under every assignment the satisfaction verdict equals the twin-recursion
// value; then bounded Full-class validity agrees with twin-extension
// validity on the universally closed battery and on a fixed list of
// always-designated statements.  `samples` appends seeded random formulas
// to the battery for breadth beyond the fixed scheme.
BatteryReport roundtrip_report(int max_size, int depth, int samples, uint64_t seed);

// The separation matrix: a glut-probing sentence is valid exactly on the
// glut-free classes, a gap-probing one exactly on the gap-free classes, and
// the classical excluded middle on all four; verdicts come from exhaustive
// enumeration up to max_size.  Also rechecks that Full-class validity
// implies validity on every subclass.
BatteryReport verify_class_separation(int max_size, uint64_t budget);

}  // namespace nclogic
