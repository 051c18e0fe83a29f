#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nclogic/universe.hpp"
#include "nclogic/verify.hpp"

namespace nclogic {

using HfId = int;

// a pure hereditarily finite set: just its member ids
struct HFSet {
    IdSet members;
    int rank = 0;
};

// interned store of hereditarily finite sets, the classical counterpart of
// the twin-extension store
class HfUniverse {
public:
    HfUniverse();  // interns the empty set as id 0

    HfId intern(IdSet members);
    const HFSet& get(HfId x) const;
    int size() const { return (int)store.size(); }
    HfId empty() const { return 0; }

    bool mem(HfId x, HfId y) const;
    int rank(HfId x) const { return get(x).rank; }

    // all sets of rank below n (n <= 4), sorted and cached
    const IdSet& level(int n);

    // brace syntax: {} and {{},{{}}}
    std::string literal(HfId x) const;
    HfId parse_literal(const std::string& text);

private:
    std::vector<HFSet> store;
    std::map<IdSet, HfId> index;
    std::vector<IdSet> levels;
};

// doubles the membership relation into both extensions; the image is always
// classical, and the map preserves membership and equality exactly
SetId check_embed(HfUniverse& hf, HfId x, Universe& uni);

// all four clauses agree between a hereditarily finite set and its doubled
// image, over every pair of rank below max_rank (<= 4); also injectivity
BatteryReport verify_check_iso(HfUniverse& hf, Universe& uni, int max_rank);

// the ids whose sets are classical with hereditarily classical members
IdSet hcl_filter(Universe& uni, const IdSet& fragment);

// the hereditarily classical members of a level are exactly the doubled
// images of the hereditarily finite sets of the same rank; also checks the
// stratified construction and the evaluator's classicality formula
BatteryReport verify_hclw_equals_vcheck(HfUniverse& hf, Universe& uni, int n);

// {u} and {u, v} with exact membership; the coded ordered pair requires
// classical components
SetId classical_singleton(Universe& uni, SetId u);
SetId classical_pair(Universe& uni, SetId u, SetId v);
SetId kuratowski(Universe& uni, SetId u, SetId v);
// strict inverse: throws ValidationError when k is not a coded pair
std::pair<SetId, SetId> kuratowski_decode(Universe& uni, SetId k);

// codes a set as the pair of its two extension images; the result is
// hereditarily classical
SetId hat_embed(Universe& uni, SetId x);

// membership and equality clauses transfer through the pair coding: decode
// both images and rederive each clause structurally (n <= 3)
BatteryReport verify_hat_iso(Universe& uni, int n);

// rebuilding the twin-extension levels out of coded pairs of hereditarily
// classical sets gives exactly the hat images of the levels (n <= 2)
BatteryReport verify_w_relativized_to_hcl(Universe& uni, int n);

}  // namespace nclogic
