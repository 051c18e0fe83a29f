#pragma once

#include "json.hpp"
#include "nclogic/hilbert.hpp"
#include "nclogic/tarski.hpp"
#include "nclogic/tf_model.hpp"

namespace nclogic {

using json = nlohmann::json;

// {"relations": {"in": 2, "R": 1}, "constants": ["a", "b"]}
Signature signature_from_json(const json& j);
json signature_to_json(const Signature& sig);

// {"domain": [...], "constants": {...}, "relations": {"R": {"arity": k,
//  "pos": [[...], ...], "neg": [...]}}, "eq_neg": [["a","b"],["b","a"]]}
TFModel tf_model_from_json(const json& j);
json tf_model_to_json(const TFModel& m);

// the signature a model presents on its own
Signature implied_signature(const TFModel& m);

// {"domain": ["a","b"], "constants": {...}, "relations": {"R": {"arity": 1,
//  "values": {"(a)": "b"}}}, "diseq": [["a","b"],["b","a"]]}
// Tuple keys list domain elements in parentheses; omitted tuples default to
// the gap value n.
FVTarskiModel fv_model_from_json(const json& j);
json fv_model_to_json(const FVTarskiModel& m);

Signature implied_signature(const FVTarskiModel& m);

// {"signature": {...}?, "hypotheses": ["p()", ...], "steps": [
//   {"formula": "...", "axiom": 1, "inst": {"phi": "...", "x": "x", "t": "c"}},
//   {"formula": "...", "hyp": 1},
//   {"formula": "...", "mp": [1, 2]},           first antecedent, then implication
//   {"formula": "...", "gen_imp": 3},
//   {"formula": "...", "gen_exists": 4}]}
// Without a signature block, relation arities are inferred from first use.
Proof proof_from_json(const json& j);

json load_json_file(const std::string& path);

}  // namespace nclogic
