#include "nclogic/universe.hpp"

#include <algorithm>

#include "nclogic/error.hpp"
#include "nclogic/parser.hpp"

namespace nclogic {

static bool sorted_unique(const IdSet& s) {
    for (size_t i = 1; i < s.size(); i++)
        if (s[i - 1] >= s[i]) return false;
    return true;
}

static bool subset_of(const IdSet& a, const IdSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Universe::Universe() { intern({}, {}); }

SetId Universe::intern(IdSet pos, IdSet quest) {
    std::sort(pos.begin(), pos.end());
    pos.erase(std::unique(pos.begin(), pos.end()), pos.end());
    std::sort(quest.begin(), quest.end());
    quest.erase(std::unique(quest.begin(), quest.end()), quest.end());
    int next = (int)store.size();
    for (const IdSet* s : {&pos, &quest})
        for (SetId m : *s)
            if (m < 0 || m >= next)
                throw ValidationError("member id " + std::to_string(m) +
                                      " is not an interned set");
    auto key = std::make_pair(pos, quest);
    auto it = index.find(key);
    if (it != index.end()) return it->second;

    NCSet s;
    s.rank = 0;
    for (const IdSet* part : {&pos, &quest})
        for (SetId m : *part) s.rank = std::max(s.rank, store[m].rank + 1);
    s.consistent = subset_of(pos, quest);
    s.complete = subset_of(quest, pos);
    s.classical = s.consistent && s.complete;
    s.pos = std::move(pos);
    s.quest = std::move(quest);
    store.push_back(std::move(s));
    index.emplace(std::move(key), next);
    return next;
}

const NCSet& Universe::get(SetId x) const {
    if (x < 0 || x >= (int)store.size())
        throw ValidationError("no interned set with id " + std::to_string(x));
    return store[x];
}

bool Universe::mem_true(SetId x, SetId y) const {
    const IdSet& p = get(y).pos;
    return std::binary_search(p.begin(), p.end(), x);
}

bool Universe::mem_false(SetId x, SetId y) const {
    const IdSet& q = get(y).quest;
    return !std::binary_search(q.begin(), q.end(), x);
}

bool Universe::eq_false(SetId x, SetId y) const {
    return !subset_of(get(x).pos, get(y).quest) || !subset_of(get(y).pos, get(x).quest);
}

TruthValue Universe::mem_value(SetId x, SetId y) const {
    return {mem_true(x, y), mem_false(x, y)};
}

TruthValue Universe::eq_value(SetId x, SetId y) const {
    return {eq_true(x, y), eq_false(x, y)};
}

TruthValue Universe::subset_value(SetId x, SetId y) const {
    const NCSet& a = get(x);
    const NCSet& b = get(y);
    return {subset_of(a.pos, b.pos) && subset_of(a.quest, b.quest),
            !subset_of(a.pos, b.quest)};
}

SetId Universe::bang_ext(SetId x) {
    IdSet p = get(x).pos;
    return intern(p, p);
}

SetId Universe::quest_ext(SetId x) {
    IdSet q = get(x).quest;
    return intern(q, q);
}

static IdSet set_union(const IdSet& a, const IdSet& b) {
    IdSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

SetId Universe::realm(SetId x) {
    IdSet r = set_union(get(x).pos, get(x).quest);
    return intern(r, r);
}

SetId Universe::classical_enum_set(IdSet members) {
    IdSet copy = members;
    return intern(std::move(members), std::move(copy));
}

SetId Universe::union_set(SetId u) {
    IdSet pos, quest;
    for (SetId z : get(u).pos) pos = set_union(pos, get(z).pos);
    for (SetId z : get(u).quest) quest = set_union(quest, get(z).quest);
    return intern(std::move(pos), std::move(quest));
}

SetId Universe::powerset_bang(SetId u) {
    const IdSet p = get(u).pos;
    const IdSet q = get(u).quest;
    if (p.size() > 16 || q.size() > 16)
        throw ValidationError("powerset input too large: 2^" + std::to_string(p.size()) +
                              " * 2^" + std::to_string(q.size()) + " members");
    IdSet members;
    for (uint32_t pm = 0; pm < (1u << p.size()); pm++)
        for (uint32_t qm = 0; qm < (1u << q.size()); qm++) {
            IdSet sp, sq;
            for (size_t i = 0; i < p.size(); i++)
                if (pm >> i & 1) sp.push_back(p[i]);
            for (size_t i = 0; i < q.size(); i++)
                if (qm >> i & 1) sq.push_back(q[i]);
            members.push_back(intern(std::move(sp), std::move(sq)));
        }
    return classical_enum_set(std::move(members));
}

IdSet Universe::close_members(IdSet seeds) const {
    IdSet out;
    std::vector<SetId> work(seeds.begin(), seeds.end());
    std::vector<bool> seen(store.size(), false);
    while (!work.empty()) {
        SetId x = work.back();
        work.pop_back();
        (void)get(x);
        if (seen[x]) continue;
        seen[x] = true;
        out.push_back(x);
        for (const IdSet* part : {&get(x).pos, &get(x).quest})
            for (SetId m : *part)
                if (!seen[m]) work.push_back(m);
    }
    std::sort(out.begin(), out.end());
    return out;
}

const IdSet& Universe::level(int n) {
    if (n < 0 || n > 3)
        throw ValidationError("level must be 0..3, the next level has 2^512 elements");
    if (levels.empty()) levels.push_back({});
    while ((int)levels.size() <= n) {
        const IdSet prev = levels.back();  // copy: intern may grow the store
        if (prev.size() > 16) throw ValidationError("level too large to enumerate");
        IdSet cur;
        for (uint32_t pm = 0; pm < (1u << prev.size()); pm++)
            for (uint32_t qm = 0; qm < (1u << prev.size()); qm++) {
                IdSet sp, sq;
                for (size_t i = 0; i < prev.size(); i++) {
                    if (pm >> i & 1) sp.push_back(prev[i]);
                    if (qm >> i & 1) sq.push_back(prev[i]);
                }
                cur.push_back(intern(std::move(sp), std::move(sq)));
            }
        std::sort(cur.begin(), cur.end());
        levels.push_back(std::move(cur));
    }
    return levels[n];
}

std::string Universe::literal(SetId x) const {
    const NCSet& s = get(x);
    std::string out = "<[";
    for (size_t i = 0; i < s.pos.size(); i++) {
        if (i) out += ",";
        out += literal(s.pos[i]);
    }
    out += "],[";
    for (size_t i = 0; i < s.quest.size(); i++) {
        if (i) out += ",";
        out += literal(s.quest[i]);
    }
    return out + "]>";
}

namespace {
struct LiteralParser {
    const std::string& text;
    size_t at = 0;
    Universe& uni;

    void skip() {
        while (at < text.size() && isspace((unsigned char)text[at])) at++;
    }
    void expect(char c) {
        skip();
        if (at >= text.size() || text[at] != c)
            throw ParseError(std::string("expected '") + c + "' in set literal", at);
        at++;
    }
    IdSet members() {
        expect('[');
        IdSet out;
        skip();
        if (at < text.size() && text[at] == ']') {
            at++;
            return out;
        }
        while (true) {
            out.push_back(set());
            skip();
            if (at < text.size() && text[at] == ',') {
                at++;
                continue;
            }
            expect(']');
            return out;
        }
    }
    SetId set() {
        expect('<');
        IdSet pos = members();
        expect(',');
        IdSet quest = members();
        expect('>');
        return uni.intern(std::move(pos), std::move(quest));
    }
};
}  // namespace

SetId Universe::parse_literal(const std::string& text) {
    LiteralParser p{text, 0, *this};
    SetId x = p.set();
    p.skip();
    if (p.at != text.size()) throw ParseError("unexpected trailing input in set literal", p.at);
    return x;
}

const std::string& Fragment::name_of(SetId x) const {
    auto it = position.find(x);
    if (it == position.end())
        throw ValidationError("set " + std::to_string(x) + " is outside the fragment");
    return tf.domain[it->second];
}

Fragment make_fragment(const Universe& u, IdSet ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    if (ids.empty()) throw ValidationError("fragment needs at least one set");
    Fragment f;
    f.ids = std::move(ids);
    for (size_t i = 0; i < f.ids.size(); i++) f.position[f.ids[i]] = (int)i;
    size_t n = f.ids.size();
    for (SetId x : f.ids)
        for (const IdSet* part : {&u.get(x).pos, &u.get(x).quest})
            for (SetId m : *part)
                if (!f.position.count(m))
                    throw ValidationError("fragment is not member-closed: set " +
                                          std::to_string(x) + " reaches " +
                                          std::to_string(m));

    for (SetId x : f.ids) f.tf.domain.push_back("w" + std::to_string(x));
    TFRel in;
    in.arity = 2;
    in.pos.assign(n * n, false);
    in.neg.assign(n * n, false);
    for (size_t i = 0; i < n; i++)
        for (size_t j = 0; j < n; j++) {
            in.pos[i * n + j] = u.mem_true(f.ids[i], f.ids[j]);
            in.neg[i * n + j] = u.mem_false(f.ids[i], f.ids[j]);
        }
    f.tf.relations["in"] = std::move(in);
    f.tf.eq_neg.assign(n * n, false);
    for (size_t i = 0; i < n; i++)
        for (size_t j = 0; j < n; j++)
            f.tf.eq_neg[i * n + j] = u.eq_false(f.ids[i], f.ids[j]);
    return f;
}

TruthValue eval_in_fragment(const Fragment& f, const FormulaPtr& phi,
                            const std::map<std::string, SetId>& env) {
    VarEnv e;
    e.reserve(env.size());
    for (auto& [v, x] : env) {
        auto it = f.position.find(x);
        if (it == f.position.end())
            throw ValidationError("set " + std::to_string(x) +
                                  " is outside the fragment");
        e.emplace_back(v, it->second);
    }
    return eval(f.tf, phi, e);
}

SetId comprehend(Universe& uni, const Fragment& f, SetId u, const FormulaPtr& phi,
                 const std::string& yvar, const std::map<std::string, SetId>& params) {
    auto fv = free_vars(phi);
    fv.erase(yvar);
    for (auto& v : fv)
        if (!params.count(v))
            throw ValidationError("comprehension formula has unbound variable \"" + v + "\"");
    std::map<std::string, SetId> env = params;
    IdSet pos, quest;
    for (SetId z : uni.get(u).pos) {
        env[yvar] = z;
        if (eval_in_fragment(f, phi, env).designated()) pos.push_back(z);
    }
    for (SetId z : uni.get(u).quest) {
        env[yvar] = z;
        if (!eval_in_fragment(f, phi, env).falsity) quest.push_back(z);
    }
    return uni.intern(std::move(pos), std::move(quest));
}

SetId acla_construct(Universe& uni, SetId u, SetId v, SetId wa, SetId wb, SetId wc,
                     SetId wd) {
    if (!uni.is_classical(u) || !uni.is_classical(v))
        throw ValidationError("both target extensions must be classical sets");
    if (uni.mem_value(wa, wb) != tv_b)
        throw ValidationError("inconsistency witness must have membership value b, got " +
                              std::string(uni.mem_value(wa, wb).name()));
    if (uni.mem_value(wc, wd) != tv_n)
        throw ValidationError("incompleteness witness must have membership value n, got " +
                              std::string(uni.mem_value(wc, wd).name()));

    // copies: interning below may grow the store and move the sets
    const IdSet up = uni.get(u).pos;
    const IdSet vp = uni.get(v).pos;
    IdSet both, only_u, only_v;
    std::set_intersection(up.begin(), up.end(), vp.begin(), vp.end(),
                          std::back_inserter(both));
    std::set_difference(up.begin(), up.end(), vp.begin(), vp.end(),
                        std::back_inserter(only_u));
    std::set_difference(vp.begin(), vp.end(), up.begin(), up.end(),
                        std::back_inserter(only_v));
    SetId inter = uni.classical_enum_set(both);
    SetId duv = uni.classical_enum_set(only_u);
    SetId dvu = uni.classical_enum_set(only_v);
    SetId bound = uni.classical_enum_set(set_union(up, vp));

    Signature sig;
    sig.relations = {{"in", 2}};
    auto phi = parse_formula(
        "z in inter | (z in duv & wa in wb) | (z in dvu & wc in wd)", sig);
    Fragment f = make_fragment(
        uni, uni.close_members({u, v, wa, wb, wc, wd, inter, duv, dvu, bound}));
    SetId x = comprehend(uni, f, bound, phi, "z",
                         {{"inter", inter},
                          {"duv", duv},
                          {"dvu", dvu},
                          {"wa", wa},
                          {"wb", wb},
                          {"wc", wc},
                          {"wd", wd}});
    SetId direct = uni.intern(up, vp);
    if (x != direct)
        throw ValidationError("construction mismatch: selector gave " + uni.literal(x) +
                              " but the direct pair is " + uni.literal(direct));
    return x;
}

SetId omega_set(Universe& uni) {
    return uni.powerset_bang(uni.classical_enum_set({uni.empty()}));
}

SetId omega_member(Universe& uni, TruthValue v) {
    IdSet pos, quest;
    if (v.truth) pos.push_back(uni.empty());
    if (!v.falsity) quest.push_back(uni.empty());
    return uni.intern(std::move(pos), std::move(quest));
}

std::string omega_name(Universe& uni, SetId x) {
    for (TruthValue v : tv_all)
        if (omega_member(uni, v) == x) return v.name();
    return "";
}

SetId truth_value_of(Universe& uni, const Fragment& f, const FormulaPtr& phi,
                     const std::map<std::string, SetId>& env) {
    return omega_member(uni, eval_in_fragment(f, phi, env));
}

}  // namespace nclogic
