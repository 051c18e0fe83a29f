#include "nclogic/verify.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "nclogic/error.hpp"
#include "nclogic/parser.hpp"
#include "nclogic/randgen.hpp"

namespace nclogic {

using nlohmann::json;

json report_to_json(const BatteryReport& r) {
    json params = json::object();
    for (auto& [k, v] : r.params) params[k] = v;
    return json{{"check", r.check},
                {"params", params},
                {"cases", r.cases},
                {"failure_count", r.failure_count},
                {"failures", r.failures},
                {"ok", r.ok()}};
}

namespace {

Signature mem_sig() {
    Signature s;
    s.relations = {{"in", 2}};
    return s;
}

FormulaPtr mf(const std::string& text) { return parse_formula(text, mem_sig()); }

// folding the value algebra over a level gives one route to quantified
// claims; the generic evaluator gives an independent second route
TruthValue fold_all(const IdSet& over, const std::function<TruthValue(SetId)>& body) {
    TruthValue acc = tv_one;
    for (SetId z : over) acc = tv_and(acc, body(z));
    return acc;
}

TruthValue fold_some(const IdSet& over, const std::function<TruthValue(SetId)>& body) {
    TruthValue acc = tv_zero;
    for (SetId z : over) acc = tv_or(acc, body(z));
    return acc;
}

std::string describe_pair(Universe& u, SetId x, SetId y) {
    return u.literal(x) + " , " + u.literal(y);
}

IdSet sample_ids(Rng& rng, const IdSet& pool, size_t want) {
    IdSet out;
    if (pool.empty()) return out;
    for (size_t i = 0; i < want; i++) out.push_back(pool[rng.next(pool.size())]);
    return out;
}

}  // namespace

BatteryReport verify_levels(Universe& uni) {
    BatteryReport r;
    r.check = "levels";
    const size_t expected[4] = {0, 1, 4, 256};
    for (int n = 0; n <= 3; n++) {
        const IdSet lvl = uni.level(n);
        r.cases++;
        if (lvl.size() != expected[n])
            r.fail("level " + std::to_string(n) + " has " + std::to_string(lvl.size()) +
                   " sets, expected " + std::to_string(expected[n]));
        for (SetId x : lvl) {
            r.cases++;
            if (uni.rank(x) >= n)
                r.fail("rank " + std::to_string(uni.rank(x)) + " set inside level " +
                       std::to_string(n) + ": " + uni.literal(x));
            if (n > 0 && !std::binary_search(uni.level(n - 1).begin(),
                                             uni.level(n - 1).end(), x) &&
                uni.rank(x) < n - 1)
                r.fail("set below the rank bound missing from the previous level: " +
                       uni.literal(x));
        }
    }

    // shrinking either extension of a member never leaves the level
    for (SetId x : uni.level(3)) {
        IdSet pos = uni.get(x).pos, quest = uni.get(x).quest;
        for (uint32_t pm = 0; pm < (1u << pos.size()); pm++)
            for (uint32_t qm = 0; qm < (1u << quest.size()); qm++) {
                IdSet sp, sq;
                for (size_t i = 0; i < pos.size(); i++)
                    if (pm >> i & 1) sp.push_back(pos[i]);
                for (size_t i = 0; i < quest.size(); i++)
                    if (qm >> i & 1) sq.push_back(quest[i]);
                r.cases++;
                if (!uni.in_level(uni.intern(std::move(sp), std::move(sq)), 3))
                    r.fail("submask escaped level 3 from " + uni.literal(x));
            }
    }

    // towers of classical singletons produce one set per rank, so no level
    // bound survives: each level tops out while ranks keep climbing
    SetId t = uni.empty();
    for (int k = 1; k <= 8; k++) {
        t = uni.intern({t}, {t});
        r.cases++;
        if (uni.rank(t) != k) r.fail("tower rank drifted at step " + std::to_string(k));
        if (uni.in_level(t, std::min(k, 3)))
            r.fail("tower step " + std::to_string(k) + " landed inside level " +
                   std::to_string(std::min(k, 3)));
    }

    // extension operators stay classical and idempotent across the level
    for (SetId x : uni.level(3)) {
        r.cases++;
        SetId bx = uni.bang_ext(x), qx = uni.quest_ext(x), rx = uni.realm(x);
        if (!uni.is_classical(bx) || !uni.is_classical(qx) || !uni.is_classical(rx))
            r.fail("extension operator broke classicality on " + uni.literal(x));
        if (uni.bang_ext(bx) != bx || uni.quest_ext(qx) != qx)
            r.fail("extension operator not idempotent on " + uni.literal(x));
        if (!uni.subset_value(bx, rx).truth || !uni.subset_value(qx, rx).truth)
            r.fail("realm does not cover the extensions of " + uni.literal(x));
        if ((uni.is_classical(x) && (bx != x || qx != x)) ||
            (bx == x && qx == x && !uni.is_classical(x)))
            r.fail("classicality does not match fixed extensions on " + uni.literal(x));
    }
    return r;
}

BatteryReport verify_extensionality(Universe& uni, int level, uint64_t seed) {
    BatteryReport r;
    r.check = "extensionality";
    r.params = {{"level", std::to_string(level)}, {"seed", std::to_string(seed)}};
    const IdSet lvl = uni.level(level);

    // native route: equality clauses against the folded member comparison
    for (SetId x : lvl)
        for (SetId y : lvl) {
            r.cases++;
            TruthValue lhs = uni.eq_value(x, y);
            TruthValue rhs = fold_all(lvl, [&](SetId z) {
                return tv_strong_iff(uni.mem_value(z, x), uni.mem_value(z, y));
            });
            if (lhs != rhs) r.fail("clause mismatch at " + describe_pair(uni, x, y));
        }

    // evaluator route on a seeded sample of pairs
    Fragment f = make_fragment(uni, lvl);
    auto body = mf("x = y <=> (forall z. (z in x <=> z in y))");
    Rng rng(seed);
    size_t samples = lvl.size() <= 4 ? lvl.size() * lvl.size() : 300;
    for (size_t i = 0; i < samples; i++) {
        SetId x = lvl[lvl.size() <= 4 ? i / lvl.size() : rng.next(lvl.size())];
        SetId y = lvl[lvl.size() <= 4 ? i % lvl.size() : rng.next(lvl.size())];
        r.cases++;
        TruthValue direct = tv_strong_iff(
            uni.eq_value(x, y), fold_all(lvl, [&](SetId z) {
                return tv_strong_iff(uni.mem_value(z, x), uni.mem_value(z, y));
            }));
        TruthValue evaled = eval_in_fragment(f, body, {{"x", x}, {"y", y}});
        if (evaled != direct)
            r.fail("evaluator disagrees with the clause route at " +
                   describe_pair(uni, x, y));
        if (!evaled.designated())
            r.fail("equality law not designated at " + describe_pair(uni, x, y));
    }
    return r;
}

BatteryReport verify_subset_equality_laws(Universe& uni, int level, uint64_t seed) {
    BatteryReport r;
    r.check = "subset-equality-laws";
    r.params = {{"level", std::to_string(level)}, {"seed", std::to_string(seed)}};
    const IdSet lvl = uni.level(level);

    for (SetId x : lvl)
        for (SetId y : lvl) {
            SetId bx = uni.bang_ext(x), by = uni.bang_ext(y);
            SetId qx = uni.quest_ext(x), qy = uni.quest_ext(y);
            TruthValue sub = uni.subset_value(x, y);
            TruthValue eq = uni.eq_value(x, y);
            auto item = [&](int n, bool got, bool want, const char* what) {
                r.cases++;
                if (got != want)
                    r.fail("law " + std::to_string(n) + " (" + what + ") failed at " +
                           describe_pair(uni, x, y));
            };

            // each law states one truth bit through classical extension sets
            item(1, sub.truth,
                 uni.subset_value(bx, by).truth && uni.subset_value(qx, qy).truth,
                 "subset truth splits into both extension inclusions");
            bool witness = false;
            for (SetId z : uni.get(x).pos)
                witness = witness || uni.mem_false(z, y);
            item(2, sub.falsity, witness,
                 "subset falsity needs an asserted member rejected on the right");
            item(2, sub.falsity, !uni.subset_value(bx, qy).truth,
                 "subset falsity through extension sets");
            TruthValue q_sub = tv_quest(sub);
            item(3, q_sub.truth, uni.subset_value(bx, qy).truth,
                 "permitted subset collapses to one inclusion");
            item(4, eq.truth,
                 uni.eq_value(bx, by).truth && uni.eq_value(qx, qy).truth,
                 "equality truth splits into extension equalities");
            bool eq_wit = false;
            for (SetId z : uni.get(x).pos) eq_wit = eq_wit || uni.mem_false(z, y);
            for (SetId z : uni.get(y).pos) eq_wit = eq_wit || uni.mem_false(z, x);
            item(5, eq.falsity, eq_wit,
                 "equality falsity needs a one-sided rejected member");
            item(5, eq.falsity,
                 !uni.subset_value(bx, qy).truth || !uni.subset_value(by, qx).truth,
                 "equality falsity through extension sets");
            TruthValue q_eq = tv_quest(eq);
            item(6, q_eq.truth,
                 uni.subset_value(bx, qy).truth && uni.subset_value(by, qx).truth,
                 "permitted equality is mutual permitted inclusion");
        }

    // evaluator cross-check: subset unfolds to its defining quantifier
    Fragment f = make_fragment(uni, lvl);
    auto body = mf("forall z. (z in x => z in y)");
    Rng rng(seed);
    size_t samples = lvl.size() <= 4 ? lvl.size() * lvl.size() : 200;
    for (size_t i = 0; i < samples; i++) {
        SetId x = lvl[lvl.size() <= 4 ? i / lvl.size() : rng.next(lvl.size())];
        SetId y = lvl[lvl.size() <= 4 ? i % lvl.size() : rng.next(lvl.size())];
        r.cases++;
        if (eval_in_fragment(f, body, {{"x", x}, {"y", y}}) != uni.subset_value(x, y))
            r.fail("subset clause disagrees with its quantifier form at " +
                   describe_pair(uni, x, y));
    }
    return r;
}

BatteryReport verify_pairing(Universe& uni, int level, uint64_t seed) {
    BatteryReport r;
    r.check = "pairing";
    r.params = {{"level", std::to_string(level)}, {"seed", std::to_string(seed)}};
    const IdSet lvl = uni.level(level);
    IdSet frame = lvl;

    for (SetId u : lvl)
        for (SetId v : lvl) {
            SetId pr = uni.classical_enum_set({u, v});
            // witness the axiom body at every candidate member
            for (SetId y : frame) {
                r.cases++;
                TruthValue lhs = uni.mem_value(y, pr);
                TruthValue rhs = tv_or(tv_bang(uni.eq_value(y, u)),
                                       tv_bang(uni.eq_value(y, v)));
                if (lhs != rhs)
                    r.fail("pair membership mismatch for y=" + uni.literal(y) +
                           " over " + describe_pair(uni, u, v));
            }
        }

    // evaluator route over a small fragment
    if (level >= 2) {
        const IdSet base = uni.level(2);
        IdSet ids = base;
        for (SetId u : base)
            for (SetId v : base) ids.push_back(uni.classical_enum_set({u, v}));
        ids = uni.close_members(ids);
        Fragment f = make_fragment(uni, ids);
        auto body = mf("y in p <=> (!(y = u) | !(y = v))");
        for (SetId u : base)
            for (SetId v : base) {
                SetId pr = uni.classical_enum_set({u, v});
                for (SetId y : f.ids) {
                    r.cases++;
                    if (!eval_in_fragment(f, body,
                                          {{"y", y}, {"p", pr}, {"u", u}, {"v", v}})
                             .designated())
                        r.fail("pair axiom body refuted in the evaluator at y=" +
                               uni.literal(y));
                }
            }
    }
    (void)seed;
    return r;
}

BatteryReport verify_union(Universe& uni, int level, uint64_t seed) {
    BatteryReport r;
    r.check = "union";
    r.params = {{"level", std::to_string(level)}, {"seed", std::to_string(seed)}};
    const IdSet lvl = uni.level(level);

    for (SetId u : lvl) {
        SetId un = uni.union_set(u);
        for (SetId y : lvl) {
            r.cases++;
            TruthValue lhs = uni.mem_value(y, un);
            TruthValue rhs = fold_some(lvl, [&](SetId z) {
                return tv_and(uni.mem_value(y, z), uni.mem_value(z, u));
            });
            if (lhs != rhs)
                r.fail("union membership mismatch for y=" + uni.literal(y) +
                       " in union of " + uni.literal(u));
        }
    }

    if (level >= 2) {
        IdSet ids = uni.level(2);
        for (SetId u : uni.level(2)) ids.push_back(uni.union_set(u));
        ids = uni.close_members(ids);
        Fragment f = make_fragment(uni, ids);
        auto body = mf("y in w <=> (exists z. (y in z & z in u))");
        for (SetId u : uni.level(2)) {
            SetId un = uni.union_set(u);
            for (SetId y : f.ids) {
                r.cases++;
                if (!eval_in_fragment(f, body, {{"y", y}, {"w", un}, {"u", u}})
                         .designated())
                    r.fail("union axiom body refuted in the evaluator at y=" +
                           uni.literal(y) + " for " + uni.literal(u));
            }
        }
    }
    return r;
}

BatteryReport verify_powerset(Universe& uni, int level, uint64_t seed) {
    BatteryReport r;
    r.check = "powerset";
    r.params = {{"level", std::to_string(level)}, {"seed", std::to_string(seed)}};
    const IdSet lvl = uni.level(level);

    for (SetId u : lvl) {
        SetId pw = uni.powerset_bang(u);
        size_t want = (size_t)1 << (uni.get(u).pos.size() + uni.get(u).quest.size());
        r.cases++;
        if (uni.get(pw).pos.size() != want)
            r.fail("powerset of " + uni.literal(u) + " has " +
                   std::to_string(uni.get(pw).pos.size()) + " members, expected " +
                   std::to_string(want));
        // the interned store holds every set seen so far, which makes the
        // membership check honest: nothing outside the powerset sneaks in
        for (SetId x = 0; x < uni.size() && x < 2048; x++) {
            r.cases++;
            TruthValue lhs = uni.mem_value(x, pw);
            TruthValue rhs = tv_bang(uni.subset_value(x, u));
            if (lhs != rhs)
                r.fail("powerset membership mismatch for x=" + uni.literal(x) +
                       " against " + uni.literal(u));
        }
    }

    if (level >= 2) {
        IdSet ids = uni.level(2);
        for (SetId u : uni.level(2)) ids.push_back(uni.powerset_bang(u));
        ids = uni.close_members(ids);
        Fragment f = make_fragment(uni, ids);
        auto body = mf("x in v <=> !(forall z. (z in x => z in u))");
        for (SetId u : uni.level(2)) {
            SetId pw = uni.powerset_bang(u);
            for (SetId x : f.ids) {
                r.cases++;
                if (!eval_in_fragment(f, body, {{"x", x}, {"v", pw}, {"u", u}})
                         .designated())
                    r.fail("powerset axiom body refuted in the evaluator at x=" +
                           uni.literal(x) + " for " + uni.literal(u));
            }
        }
    }
    (void)seed;
    return r;
}

BatteryReport verify_classical_superset(Universe& uni, int level, uint64_t seed) {
    BatteryReport r;
    r.check = "classical-superset";
    r.params = {{"level", std::to_string(level)}, {"seed", std::to_string(seed)}};
    const IdSet lvl = uni.level(level);

    for (SetId x : lvl) {
        SetId c = uni.realm(x);
        r.cases++;
        if (!uni.is_classical(c)) {
            r.fail("realm of " + uni.literal(x) + " is not classical");
            continue;
        }
        if (!uni.subset_value(x, c).designated())
            r.fail("realm of " + uni.literal(x) + " does not include it");
        // classical sets have exact membership at every candidate
        for (SetId y : lvl) {
            r.cases++;
            if (!uni.mem_value(y, c).classical())
                r.fail("realm membership not classical at y=" + uni.literal(y) +
                       " for " + uni.literal(x));
        }
    }

    if (level >= 2) {
        IdSet ids = uni.level(2);
        for (SetId x : uni.level(2)) ids.push_back(uni.realm(x));
        ids = uni.close_members(ids);
        Fragment f = make_fragment(uni, ids);
        auto body = mf("(forall z. (z in x => z in c)) & (forall y. o(y in c))");
        for (SetId x : uni.level(2)) {
            r.cases++;
            if (!eval_in_fragment(f, body, {{"x", x}, {"c", uni.realm(x)}})
                     .designated())
                r.fail("superset axiom body refuted in the evaluator for " +
                       uni.literal(x));
        }
    }
    (void)seed;
    return r;
}

BatteryReport verify_comprehension(Universe& uni, uint64_t seed) {
    BatteryReport r;
    r.check = "comprehension";
    r.params = {{"seed", std::to_string(seed)}};

    const std::vector<std::string> plain = {
        "bot",
        "y = y",
        "~(y = y)",
        "y in p1",
        "!(y in p1)",
        "?(y in p1)",
        "y in p1 & ~(y in p2)",
        "o(y in p1)",
    };
    const std::vector<std::string> quantified = {
        "exists z. z in y",
        "forall z. (z in y => z in p1)",
    };

    auto run = [&](const IdSet& pool, const Fragment& f,
                   const std::vector<std::string>& texts, const IdSet& inputs) {
        Rng rng(seed);
        for (const std::string& text : texts) {
            FormulaPtr phi = mf(text);
            for (SetId u : inputs) {
                SetId p1 = pool[rng.next(pool.size())];
                SetId p2 = pool[rng.next(pool.size())];
                std::map<std::string, SetId> params;
                if (free_vars(phi).count("p1")) params["p1"] = p1;
                if (free_vars(phi).count("p2")) params["p2"] = p2;
                SetId x = comprehend(uni, f, u, phi, "y", params);

                // the separated set matches the conjunction clause exactly,
                // at every candidate, members of u or not
                std::map<std::string, SetId> env = params;
                for (SetId y : pool) {
                    env["y"] = y;
                    TruthValue val = eval_in_fragment(f, phi, env);
                    TruthValue want = tv_and(uni.mem_value(y, u), val);
                    r.cases++;
                    if (uni.mem_value(y, x) != want)
                        r.fail("separation mismatch for " + text +
                               " at y=" + uni.literal(y));
                }
                r.cases++;
                if (!uni.subset_value(x, u).designated())
                    r.fail("separation left its bound for " + text);
            }
        }
    };

    Fragment f2 = make_fragment(uni, uni.level(2));
    run(uni.level(2), f2, plain, uni.level(2));
    run(uni.level(2), f2, quantified, uni.level(2));

    Fragment f3 = make_fragment(uni, uni.level(3));
    run(uni.level(3), f3, plain, uni.level(3));
    Rng rng(seed + 1);
    run(uni.level(3), f3, quantified, sample_ids(rng, uni.level(3), 8));

    // classical bounds with exact conditions separate classically
    for (SetId u : uni.level(3)) {
        if (!uni.is_classical(u)) continue;
        SetId p1 = uni.level(2)[seed % 4];
        SetId x = comprehend(uni, f3, u, mf("!(y in p1)"), "y", {{"p1", p1}});
        r.cases++;
        if (!uni.is_classical(x))
            r.fail("exact condition under a classical bound gave " + uni.literal(x));
    }
    return r;
}

BatteryReport verify_replacement(Universe& uni) {
    BatteryReport r;
    r.check = "replacement";
    r.params = {{"inputs", "level 3"}};

    struct Op {
        std::string name;
        std::function<SetId(SetId)> fn;
        std::string formula;  // functional characterization of w = op(y)
    };
    std::vector<Op> ops = {
        {"permitted-extension", [&](SetId y) { return uni.quest_ext(y); },
         "!(forall z. (z in w <=> ?(z in y)))"},
        {"asserted-extension", [&](SetId y) { return uni.bang_ext(y); },
         "!(forall z. (z in w <=> !(z in y)))"},
        {"classical-singleton", [&](SetId y) { return uni.classical_enum_set({y}); },
         "!(forall z. (z in w <=> !(z = y)))"},
    };

    const IdSet lvl = uni.level(3);
    for (const Op& op : ops) {
        // image of every level member exists within reach of the level
        IdSet frame = lvl;
        for (SetId y : lvl) frame.push_back(op.fn(y));
        frame = uni.close_members(frame);
        std::map<SetId, SetId> image_of;
        for (SetId w : frame) image_of[w] = op.fn(w);

        // the characterizing formula is exact, and designated only at the
        // actual image
        Fragment f = make_fragment(uni, frame);
        FormulaPtr phi = mf(op.formula);
        for (SetId y : uni.level(2)) {
            SetId img = op.fn(y);
            IdSet ws = uni.level(2);
            ws.push_back(img);
            std::sort(ws.begin(), ws.end());
            ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
            for (SetId w : ws) {
                r.cases++;
                TruthValue val = eval_in_fragment(f, phi, {{"w", w}, {"y", y}});
                if (!val.classical())
                    r.fail(op.name + " characterization not exact at w=" +
                           uni.literal(w));
                if (val.designated() != (w == img))
                    r.fail(op.name + " characterization picks the wrong image at y=" +
                           uni.literal(y));
            }
        }

        // replacement instance: apply the op through both extensions
        for (SetId u : lvl) {
            IdSet pos, quest;
            for (SetId z : uni.get(u).pos) pos.push_back(image_of.at(z));
            for (SetId z : uni.get(u).quest) quest.push_back(image_of.at(z));
            SetId img = uni.intern(std::move(pos), std::move(quest));
            for (SetId z : frame) {
                r.cases++;
                TruthValue lhs = uni.mem_value(z, img);
                TruthValue rhs = fold_some(frame, [&](SetId w) {
                    TruthValue is_img = image_of.at(w) == z ? tv_one : tv_zero;
                    return tv_and(uni.mem_value(w, u), is_img);
                });
                if (lhs != rhs)
                    r.fail(op.name + " image membership mismatch at z=" +
                           uni.literal(z) + " for input " + uni.literal(u));
            }
        }
    }
    return r;
}

BatteryReport verify_acla(Universe& uni, uint64_t seed) {
    BatteryReport r;
    r.check = "classical-pair-reconstruction";
    r.params = {{"seed", std::to_string(seed)}};

    SetId e = uni.empty();
    SetId over = uni.intern({e}, {});
    SetId under = uni.intern({}, {e});
    SetId ce = uni.classical_enum_set({e});

    auto attempt = [&](SetId a, SetId b) {
        r.cases++;
        try {
            SetId x = acla_construct(uni, a, b, e, over, e, under);
            if (uni.bang_ext(x) != a || uni.quest_ext(x) != b)
                r.fail("extensions drifted for " + describe_pair(uni, a, b));
            if (x != uni.intern(uni.get(a).pos, uni.get(b).pos))
                r.fail("selector missed the direct pair for " +
                       describe_pair(uni, a, b));
        } catch (const ValidationError& err) {
            r.fail(std::string("construction threw: ") + err.what());
        }
    };

    // every ordered pair over the two-element base
    std::vector<SetId> base;
    for (int mask = 0; mask < 4; mask++) {
        IdSet members;
        if (mask & 1) members.push_back(e);
        if (mask & 2) members.push_back(ce);
        base.push_back(uni.classical_enum_set(members));
    }
    for (SetId a : base)
        for (SetId b : base) attempt(a, b);

    // seeded sample of classical pairs built over the next level
    IdSet classical;
    for (SetId x : uni.level(3))
        if (uni.is_classical(x)) classical.push_back(x);
    Rng rng(seed);
    for (int i = 0; i < 100; i++) {
        IdSet ma, mb;
        for (SetId x : classical) {
            if (rng.coin()) ma.push_back(x);
            if (rng.coin()) mb.push_back(x);
        }
        attempt(uni.classical_enum_set(ma), uni.classical_enum_set(mb));
    }
    return r;
}

BatteryReport verify_omega(Universe& uni, uint64_t seed) {
    BatteryReport r;
    r.check = "truth-value-sets";
    r.params = {{"seed", std::to_string(seed)}};

    SetId om = omega_set(uni);
    r.cases++;
    if (uni.get(om).pos.size() != 4 || !uni.is_classical(om))
        r.fail("the value set should hold exactly four members classically");
    std::set<std::string> names;
    for (SetId x : uni.get(om).pos) names.insert(omega_name(uni, x));
    r.cases++;
    if (names != std::set<std::string>{"1", "b", "n", "0"})
        r.fail("value set member names are off");

    // quoting a value and asking whether the empty set got in reads it back
    for (TruthValue v : tv_all) {
        r.cases++;
        SetId q = omega_member(uni, v);
        if (uni.mem_value(uni.empty(), q) != v)
            r.fail(std::string("readback failed for value ") + v.name());
    }

    // battery: fixed shapes plus seeded random closed formulas
    Fragment f = make_fragment(uni, uni.level(2));
    std::vector<FormulaPtr> battery;
    for (const char* text :
         {"bot", "~bot", "forall x. x = x", "exists x. ~(x = x)",
          "forall x. forall y. (x in y | ~(x in y))",
          "exists x. exists y. (x in y & ~(x in y))",
          "forall x. ?(exists y. x in y)", "forall x. (x = x -> bot)",
          "!(exists x. x in x)", "?(exists x. x in x)"})
        battery.push_back(mf(text));
    Signature sig = mem_sig();
    Rng rng(seed);
    FormulaGenOptions opt;
    opt.max_depth = 3;
    opt.var_pool = {"x", "y"};
    while (battery.size() < 50) {
        FormulaPtr g = random_formula(rng, sig, opt);
        if (!free_vars(g).empty()) continue;
        battery.push_back(g);
    }
    for (const FormulaPtr& phi : battery) {
        r.cases++;
        TruthValue v = eval_in_fragment(f, phi, {});
        SetId quoted = truth_value_of(uni, f, phi, {});
        if (quoted != omega_member(uni, v))
            r.fail("quotation drifted for " + render(phi));
        if (uni.mem_value(uni.empty(), quoted) != v)
            r.fail("unquoting drifted for " + render(phi));
    }
    return r;
}

const std::vector<std::string>& axiom_names() {
    static const std::vector<std::string> names = {
        "extensionality", "comprehension", "classical-superset", "replacement",
        "pairing",        "powerset",      "union",
    };
    return names;
}

BatteryReport verify_axiom(Universe& uni, const std::string& name, int level,
                           uint64_t seed) {
    if (name == "extensionality") return verify_extensionality(uni, level, seed);
    if (name == "comprehension") return verify_comprehension(uni, seed);
    if (name == "classical-superset")
        return verify_classical_superset(uni, level, seed);
    if (name == "replacement") return verify_replacement(uni);
    if (name == "pairing") return verify_pairing(uni, level, seed);
    if (name == "powerset") return verify_powerset(uni, level, seed);
    if (name == "union") return verify_union(uni, level, seed);
    throw ValidationError("no battery named \"" + name +
                          "\"; known: extensionality comprehension "
                          "classical-superset replacement pairing powerset union");
}

}  // namespace nclogic
