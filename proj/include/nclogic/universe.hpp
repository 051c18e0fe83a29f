#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nclogic/formula.hpp"
#include "nclogic/tf_model.hpp"

namespace nclogic {

using SetId = int;
using IdSet = std::vector<SetId>;  // sorted, duplicate-free

// A set given by its two extension witnesses: pos carries membership truth,
// quest carries membership non-falsity.  Sets are interned, so equal pairs
// share one id and positive equality is id equality.
struct NCSet {
    IdSet pos, quest;
    int rank = 0;  // 0 for the empty pair, else 1 + max member rank
    bool classical = false, consistent = false, complete = false;
};

class Universe {
public:
    Universe();  // interns the empty set as id 0

    SetId intern(IdSet pos, IdSet quest);
    const NCSet& get(SetId x) const;
    int size() const { return (int)store.size(); }
    SetId empty() const { return 0; }

    // membership and equality clauses
    bool mem_true(SetId x, SetId y) const;   // x in pos(y)
    bool mem_false(SetId x, SetId y) const;  // x not in quest(y)
    bool eq_true(SetId x, SetId y) const { return x == y; }
    bool eq_false(SetId x, SetId y) const;
    TruthValue mem_value(SetId x, SetId y) const;
    TruthValue eq_value(SetId x, SetId y) const;
    // truth: both extensions included; falsity: pos(x) not within quest(y)
    TruthValue subset_value(SetId x, SetId y) const;

    bool is_classical(SetId x) const { return get(x).classical; }
    bool is_consistent(SetId x) const { return get(x).consistent; }
    bool is_complete(SetId x) const { return get(x).complete; }
    int rank(SetId x) const { return get(x).rank; }

    SetId bang_ext(SetId x);
    SetId quest_ext(SetId x);
    SetId realm(SetId x);
    SetId classical_enum_set(IdSet members);
    SetId union_set(SetId u);
    SetId powerset_bang(SetId u);

    // every x reachable through pos/quest from the seeds, sorted
    IdSet close_members(IdSet seeds) const;

    // all of level n (n <= 3), deterministically ordered and cached;
    // level n holds exactly the sets of rank below n
    const IdSet& level(int n);
    bool in_level(SetId x, int n) const { return rank(x) < n; }

    // literal syntax <[members],[members]>, e.g. <[],[]> for the empty set
    std::string literal(SetId x) const;
    SetId parse_literal(const std::string& text);

private:
    std::vector<NCSet> store;
    std::map<std::pair<IdSet, IdSet>, SetId> index;
    std::vector<IdSet> levels;
};

// A member-closed collection of sets packaged as a model over {in: 2},
// with domain names "w<id>".
struct Fragment {
    IdSet ids;
    TFModel tf;
    std::map<SetId, int> position;

    const std::string& name_of(SetId x) const;
    bool contains(SetId x) const { return position.count(x) != 0; }
};

// throws ValidationError when ids are not member-closed
Fragment make_fragment(const Universe& u, IdSet ids);

// evaluates a formula over the fragment with set-valued variables
TruthValue eval_in_fragment(const Fragment& f, const FormulaPtr& phi,
                            const std::map<std::string, SetId>& env);

// the set {z in u : phi(z)} with phi evaluated over the fragment:
// pos keeps members where phi comes out designated, quest keeps members
// where phi does not come out false
SetId comprehend(Universe& uni, const Fragment& f, SetId u, const FormulaPtr& phi,
                 const std::string& yvar, const std::map<std::string, SetId>& params = {});

// Builds x with bang_ext(x) = u and quest_ext(x) = v by evaluating the
// selector formula
//   z in inter | (z in duv & wa in wb) | (z in dvu & wc in wd)
// over the closure of u, v and the witnesses; (wa, wb) must make membership
// come out both-true-and-false, (wc, wd) neither.  Also asserts the result
// equals the direct pair (pos(u), pos(v)).
SetId acla_construct(Universe& uni, SetId u, SetId v, SetId wa, SetId wb, SetId wc,
                     SetId wd);

// the classical set of all pairs over {empty}: exactly four members
SetId omega_set(Universe& uni);
// the omega member encoding a truth value, and its name "1"/"b"/"n"/"0"
SetId omega_member(Universe& uni, TruthValue v);
std::string omega_name(Universe& uni, SetId x);

// the omega member for a closed formula evaluated over the fragment
SetId truth_value_of(Universe& uni, const Fragment& f, const FormulaPtr& phi,
                     const std::map<std::string, SetId>& env = {});

}  // namespace nclogic
