#include "nclogic/interpret.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "nclogic/error.hpp"
#include "nclogic/parser.hpp"

namespace nclogic {

HfUniverse::HfUniverse() { intern({}); }

HfId HfUniverse::intern(IdSet members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    int next = (int)store.size();
    for (HfId m : members)
        if (m < 0 || m >= next)
            throw ValidationError("member id " + std::to_string(m) +
                                  " is not an interned set");
    auto it = index.find(members);
    if (it != index.end()) return it->second;
    HFSet s;
    s.rank = 0;
    for (HfId m : members) s.rank = std::max(s.rank, store[m].rank + 1);
    s.members = members;
    store.push_back(std::move(s));
    index.emplace(std::move(members), next);
    return next;
}

const HFSet& HfUniverse::get(HfId x) const {
    if (x < 0 || x >= (int)store.size())
        throw ValidationError("no interned set with id " + std::to_string(x));
    return store[x];
}

bool HfUniverse::mem(HfId x, HfId y) const {
    const IdSet& m = get(y).members;
    return std::binary_search(m.begin(), m.end(), x);
}

const IdSet& HfUniverse::level(int n) {
    if (n < 0 || n > 4)
        throw ValidationError("level must be 0..4, the next level has 65536 elements");
    if (levels.empty()) levels.push_back({});
    while ((int)levels.size() <= n) {
        const IdSet prev = levels.back();  // copy: intern grows the store
        if (prev.size() > 16) throw ValidationError("level too large to enumerate");
        IdSet cur;
        for (uint32_t mask = 0; mask < (1u << prev.size()); mask++) {
            IdSet members;
            for (size_t i = 0; i < prev.size(); i++)
                if (mask >> i & 1) members.push_back(prev[i]);
            cur.push_back(intern(std::move(members)));
        }
        std::sort(cur.begin(), cur.end());
        levels.push_back(std::move(cur));
    }
    return levels[n];
}

std::string HfUniverse::literal(HfId x) const {
    std::string out = "{";
    const IdSet& m = get(x).members;
    for (size_t i = 0; i < m.size(); i++) {
        if (i) out += ",";
        out += literal(m[i]);
    }
    return out + "}";
}

namespace {
struct HfParser {
    const std::string& text;
    size_t at = 0;
    HfUniverse& hf;

    void skip() {
        while (at < text.size() && isspace((unsigned char)text[at])) at++;
    }
    HfId set() {
        skip();
        if (at >= text.size() || text[at] != '{')
            throw ParseError("expected '{' in set literal", at);
        at++;
        IdSet members;
        skip();
        if (at < text.size() && text[at] == '}') {
            at++;
            return hf.intern(std::move(members));
        }
        while (true) {
            members.push_back(set());
            skip();
            if (at < text.size() && text[at] == ',') {
                at++;
                continue;
            }
            if (at < text.size() && text[at] == '}') {
                at++;
                return hf.intern(std::move(members));
            }
            throw ParseError("expected ',' or '}' in set literal", at);
        }
    }
};
}  // namespace

HfId HfUniverse::parse_literal(const std::string& text) {
    HfParser p{text, 0, *this};
    HfId x = p.set();
    p.skip();
    if (p.at != text.size())
        throw ParseError("unexpected trailing input in set literal", p.at);
    return x;
}

SetId check_embed(HfUniverse& hf, HfId x, Universe& uni) {
    IdSet images;
    for (HfId m : IdSet(hf.get(x).members)) images.push_back(check_embed(hf, m, uni));
    return uni.classical_enum_set(std::move(images));
}

BatteryReport verify_check_iso(HfUniverse& hf, Universe& uni, int max_rank) {
    if (max_rank < 0 || max_rank > 4)
        throw ValidationError("rank bound must be 0..4");
    BatteryReport r;
    r.check = "doubling-embedding-iso";
    r.params = {{"max_rank", std::to_string(max_rank)}};

    const IdSet lvl = hf.level(max_rank);
    std::map<HfId, SetId> image;
    std::set<SetId> seen;
    for (HfId x : lvl) {
        SetId cx = check_embed(hf, x, uni);
        image[x] = cx;
        r.cases++;
        if (!uni.is_classical(cx))
            r.fail("image of " + hf.literal(x) + " is not classical");
        if (uni.rank(cx) != hf.rank(x))
            r.fail("image of " + hf.literal(x) + " changed rank");
        if (!seen.insert(cx).second)
            r.fail("image collision at " + hf.literal(x));
    }

    for (HfId x : lvl)
        for (HfId y : lvl) {
            SetId cx = image[x], cy = image[y];
            r.cases++;
            bool bad = hf.mem(x, y) != uni.mem_true(cx, cy) ||
                       hf.mem(x, y) == uni.mem_false(cx, cy) ||
                       (x == y) != uni.eq_true(cx, cy) ||
                       (x != y) != uni.eq_false(cx, cy);
            if (bad)
                r.fail("clause drift at " + hf.literal(x) + " vs " + hf.literal(y));
        }
    return r;
}

namespace {
bool hereditarily_classical(Universe& uni, SetId x, std::map<SetId, bool>& memo) {
    auto it = memo.find(x);
    if (it != memo.end()) return it->second;
    memo[x] = false;  // cycles are impossible in a ranked store, but be safe
    bool ok = uni.is_classical(x);
    if (ok)
        for (SetId m : IdSet(uni.get(x).pos))
            if (!hereditarily_classical(uni, m, memo)) {
                ok = false;
                break;
            }
    memo[x] = ok;
    return ok;
}
}  // namespace

IdSet hcl_filter(Universe& uni, const IdSet& fragment) {
    std::map<SetId, bool> memo;
    IdSet out;
    for (SetId x : fragment)
        if (hereditarily_classical(uni, x, memo)) out.push_back(x);
    return out;
}

BatteryReport verify_hclw_equals_vcheck(HfUniverse& hf, Universe& uni, int n) {
    if (n < 0 || n > 3) throw ValidationError("level must be 0..3");
    BatteryReport r;
    r.check = "classical-core-matches-doubled-images";
    r.params = {{"level", std::to_string(n)}};

    const IdSet lvl = uni.level(n);
    IdSet core = hcl_filter(uni, lvl);

    // one side: the doubled images of the hereditarily finite level
    IdSet images;
    for (HfId x : hf.level(n)) images.push_back(check_embed(hf, x, uni));
    std::sort(images.begin(), images.end());
    r.cases++;
    if (core != images) {
        r.fail("core has " + std::to_string(core.size()) + " sets, images " +
               std::to_string(images.size()));
        for (SetId x : core)
            if (!std::binary_search(images.begin(), images.end(), x))
                r.fail("core set is not a doubled image: " + uni.literal(x));
        for (SetId x : images)
            if (!std::binary_search(core.begin(), core.end(), x))
                r.fail("doubled image missed by the filter: " + uni.literal(x));
    }

    // second side: the stratified construction reaches the same collection
    IdSet stratum;
    for (int k = 0; k < n; k++) {
        IdSet next;
        for (SetId x : lvl) {
            if (!uni.is_classical(x)) continue;
            bool inside = true;
            for (SetId m : uni.get(x).pos)
                inside = inside &&
                         std::binary_search(stratum.begin(), stratum.end(), m);
            if (inside) next.push_back(x);
        }
        stratum = std::move(next);
    }
    r.cases++;
    if (stratum != core)
        r.fail("stratified construction disagrees with the memoized filter at level " +
               std::to_string(n));

    // evaluator route for classicality of each candidate
    if (n >= 1) {
        Fragment f = make_fragment(uni, lvl);
        Signature sig;
        sig.relations = {{"in", 2}};
        auto phi = parse_formula("forall y. o(y in x)", sig);
        for (SetId x : lvl) {
            r.cases++;
            if (eval_in_fragment(f, phi, {{"x", x}}).designated() !=
                uni.is_classical(x))
                r.fail("evaluator classicality disagrees at " + uni.literal(x));
        }
    }
    return r;
}

SetId classical_singleton(Universe& uni, SetId u) {
    return uni.classical_enum_set({u});
}

SetId classical_pair(Universe& uni, SetId u, SetId v) {
    return uni.classical_enum_set({u, v});
}

SetId kuratowski(Universe& uni, SetId u, SetId v) {
    if (!uni.is_classical(u) || !uni.is_classical(v))
        throw ValidationError("coded pairs need classical components");
    return classical_pair(uni, classical_singleton(uni, u),
                          classical_pair(uni, u, v));
}

std::pair<SetId, SetId> kuratowski_decode(Universe& uni, SetId k) {
    const NCSet& s = uni.get(k);
    if (!s.classical || s.pos.empty() || s.pos.size() > 2)
        throw ValidationError("not a coded pair: " + uni.literal(k));
    SetId first = -1, second = -1;
    // the singleton member names the first component
    for (SetId m : s.pos) {
        const NCSet& ms = uni.get(m);
        if (!ms.classical || ms.pos.empty() || ms.pos.size() > 2)
            throw ValidationError("not a coded pair: " + uni.literal(k));
        if (ms.pos.size() == 1) first = ms.pos[0];
    }
    if (first < 0) throw ValidationError("not a coded pair: " + uni.literal(k));
    for (SetId m : s.pos) {
        const NCSet& ms = uni.get(m);
        for (SetId c : ms.pos)
            if (c != first) second = c;
    }
    if (second < 0) second = first;  // degenerate {{u}}
    if (kuratowski(uni, first, second) != k)
        throw ValidationError("not a coded pair: " + uni.literal(k));
    return {first, second};
}

SetId hat_embed(Universe& uni, SetId x) {
    IdSet pos_imgs, quest_imgs;
    for (SetId m : IdSet(uni.get(x).pos)) pos_imgs.push_back(hat_embed(uni, m));
    for (SetId m : IdSet(uni.get(x).quest)) quest_imgs.push_back(hat_embed(uni, m));
    SetId a = uni.classical_enum_set(std::move(pos_imgs));
    SetId b = uni.classical_enum_set(std::move(quest_imgs));
    return kuratowski(uni, a, b);
}

BatteryReport verify_hat_iso(Universe& uni, int n) {
    if (n < 0 || n > 3) throw ValidationError("level must be 0..3");
    BatteryReport r;
    r.check = "pair-coding-iso";
    r.params = {{"level", std::to_string(n)}};

    const IdSet lvl = uni.level(n);
    std::map<SetId, SetId> image;
    std::set<SetId> seen;
    for (SetId x : lvl) {
        SetId h = hat_embed(uni, x);
        image[x] = h;
        r.cases++;
        if (!seen.insert(h).second) r.fail("image collision at " + uni.literal(x));
        IdSet reach = uni.close_members({h});
        if (hcl_filter(uni, reach).size() != reach.size())
            r.fail("image of " + uni.literal(x) + " is not hereditarily classical");
        auto [a, b] = kuratowski_decode(uni, h);
        // coordinates are the componentwise images of the two extensions
        IdSet want_a, want_b;
        for (SetId m : IdSet(uni.get(x).pos)) want_a.push_back(hat_embed(uni, m));
        for (SetId m : IdSet(uni.get(x).quest)) want_b.push_back(hat_embed(uni, m));
        if (a != uni.classical_enum_set(std::move(want_a)) ||
            b != uni.classical_enum_set(std::move(want_b)))
            r.fail("decoded coordinates drifted for " + uni.literal(x));
        if (uni.is_classical(x) && a != b)
            r.fail("classical set coded with unequal coordinates: " + uni.literal(x));
    }

    auto includes = [&](SetId big, SetId small) {
        const IdSet& b = uni.get(big).pos;
        const IdSet& s = uni.get(small).pos;
        return std::includes(b.begin(), b.end(), s.begin(), s.end());
    };
    for (SetId x : lvl)
        for (SetId y : lvl) {
            SetId hx = image[x], hy = image[y];
            auto [c, d] = kuratowski_decode(uni, hy);
            auto [a, b] = kuratowski_decode(uni, hx);
            r.cases++;
            // each source clause rederived from the coded structure alone
            bool bad =
                uni.mem_true(x, y) != uni.mem_true(hx, c) ||
                uni.mem_false(x, y) != !uni.mem_true(hx, d) ||
                uni.eq_true(x, y) != (hx == hy) ||
                uni.eq_false(x, y) != (!includes(d, a) || !includes(b, c));
            if (bad)
                r.fail("clause drift at " + uni.literal(x) + " vs " + uni.literal(y));
        }
    return r;
}

BatteryReport verify_w_relativized_to_hcl(Universe& uni, int n) {
    if (n < 0 || n > 2)
        throw ValidationError("level must be 0..2, coded levels grow doubly fast");
    BatteryReport r;
    r.check = "coded-levels-match-pair-images";
    r.params = {{"level", std::to_string(n)}};

    // rebuild the levels out of coded pairs of classical subsets
    IdSet coded;  // level k, sorted
    for (int k = 1; k <= n; k++) {
        IdSet next;
        if (coded.size() > 16) throw ValidationError("coded level too large");
        for (uint32_t am = 0; am < (1u << coded.size()); am++)
            for (uint32_t bm = 0; bm < (1u << coded.size()); bm++) {
                IdSet as, bs;
                for (size_t i = 0; i < coded.size(); i++) {
                    if (am >> i & 1) as.push_back(coded[i]);
                    if (bm >> i & 1) bs.push_back(coded[i]);
                }
                SetId a = uni.classical_enum_set(std::move(as));
                SetId b = uni.classical_enum_set(std::move(bs));
                next.push_back(kuratowski(uni, a, b));
            }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        coded = std::move(next);
    }

    IdSet images;
    for (SetId x : uni.level(n)) images.push_back(hat_embed(uni, x));
    std::sort(images.begin(), images.end());

    r.cases++;
    if (coded != images) {
        r.fail("coded level has " + std::to_string(coded.size()) +
               " sets, images " + std::to_string(images.size()));
        for (SetId x : coded)
            if (!std::binary_search(images.begin(), images.end(), x))
                r.fail("coded pair is not an image: " + uni.literal(x));
    }

    // every coded element is hereditarily classical
    for (SetId x : coded) {
        r.cases++;
        IdSet reach = uni.close_members({x});
        if (hcl_filter(uni, reach).size() != reach.size())
            r.fail("coded element is not hereditarily classical: " + uni.literal(x));
    }

    // a pair with a component from outside the previous coded level must
    // not appear
    if (n >= 2) {
        SetId stray = kuratowski(
            uni, uni.classical_enum_set({uni.empty()}), uni.empty());
        r.cases++;
        if (std::binary_search(coded.begin(), coded.end(), stray))
            r.fail("stray coded pair slipped into the level");
    }
    return r;
}

}  // namespace nclogic
