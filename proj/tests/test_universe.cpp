#include <algorithm>

#include "doctest.h"
#include "nclogic/error.hpp"
#include "nclogic/parser.hpp"
#include "nclogic/universe.hpp"

using namespace nclogic;

namespace {

Signature mem_sig() {
    Signature s;
    s.relations = {{"in", 2}};
    return s;
}

FormulaPtr mf(const std::string& text) { return parse_formula(text, mem_sig()); }

}  // namespace

TEST_CASE("interning gives stable ids and ranks") {
    Universe u;
    CHECK(u.empty() == 0);
    CHECK(u.size() == 1);
    CHECK(u.rank(0) == 0);
    CHECK(u.is_classical(0));

    CHECK(u.intern({}, {}) == 0);
    SetId a = u.intern({0}, {0});
    CHECK(a == 1);
    CHECK(u.rank(a) == 1);
    CHECK(u.intern({0, 0}, {0}) == a);  // duplicates collapse
    CHECK(u.size() == 2);

    SetId b = u.intern({a, 0}, {});
    SetId b2 = u.intern({0, a}, {});  // order of mention is irrelevant
    CHECK(b == b2);
    CHECK(u.rank(b) == 2);

    CHECK_THROWS_AS(u.intern({42}, {}), ValidationError);
    CHECK_THROWS_AS((void)u.get(99), ValidationError);

    // towers of classical singletons climb one rank per step
    SetId r = u.empty();
    for (int k = 1; k <= 6; k++) {
        r = u.intern({r}, {r});
        CHECK(u.rank(r) == k);
        CHECK(u.is_classical(r));
    }
    CHECK_FALSE(u.in_level(r, 3));
}

TEST_CASE("membership and equality clauses") {
    Universe u;
    SetId e = u.empty();
    SetId over = u.intern({e}, {});   // asserts e without permitting it
    SetId under = u.intern({}, {e});  // permits e without asserting it
    SetId full = u.intern({e}, {e});

    CHECK(u.mem_value(e, over) == tv_b);
    CHECK(u.mem_value(e, under) == tv_n);
    CHECK(u.mem_value(e, full) == tv_one);
    CHECK(u.mem_value(e, e) == tv_zero);
    CHECK(u.mem_value(full, over) == tv_zero);

    CHECK(u.is_complete(over));
    CHECK_FALSE(u.is_consistent(over));
    CHECK(u.is_consistent(under));
    CHECK_FALSE(u.is_complete(under));
    CHECK(u.is_classical(full));

    // identity is positively reflexive, yet `over` also denies itself:
    // its asserted member e is not permitted, so the pair is self-unequal
    CHECK(u.eq_value(over, over) == tv_b);
    CHECK(u.eq_value(full, full) == tv_one);
    CHECK(u.eq_value(e, e) == tv_one);

    // distinct ids are never positively equal; denial needs a member that
    // one side asserts and the other side does not even permit
    CHECK(u.eq_value(over, under) == tv_n);  // under permits what over asserts
    CHECK(u.eq_value(under, e) == tv_n);
    CHECK(u.eq_value(full, e) == tv_zero);
    CHECK(u.eq_value(over, full) == tv_zero);  // full asserts e, over rejects it

    CHECK(u.subset_value(e, full) == tv_one);
    CHECK(u.subset_value(over, full) == tv_one);
    CHECK(u.subset_value(full, under) == tv_n);  // not true, yet e stays permitted
    CHECK(u.subset_value(over, under) == tv_n);
    CHECK(u.subset_value(full, over) == tv_zero);
}

TEST_CASE("levels have the advertised sizes and are cumulative") {
    Universe u;
    CHECK(u.level(0).empty());
    CHECK(u.level(1).size() == 1);
    CHECK(u.level(2).size() == 4);
    CHECK(u.level(3).size() == 256);
    CHECK_THROWS_AS(u.level(4), ValidationError);

    const IdSet& l2 = u.level(2);
    const IdSet& l3 = u.level(3);
    CHECK(std::includes(l3.begin(), l3.end(), l2.begin(), l2.end()));
    for (SetId x : l3) {
        CHECK(u.rank(x) <= 2);
        CHECK(u.in_level(x, 3));
    }
    // level membership is exactly a rank bound
    for (SetId x = 0; x < u.size(); x++)
        CHECK(std::binary_search(l3.begin(), l3.end(), x) == (u.rank(x) < 3));

    // levels are closed under shrinking either extension
    for (SetId x : u.level(3)) {
        IdSet pos = u.get(x).pos, quest = u.get(x).quest;
        for (uint32_t pm = 0; pm < (1u << pos.size()); pm++)
            for (uint32_t qm = 0; qm < (1u << quest.size()); qm++) {
                IdSet sp, sq;
                for (size_t i = 0; i < pos.size(); i++)
                    if (pm >> i & 1) sp.push_back(pos[i]);
                for (size_t i = 0; i < quest.size(); i++)
                    if (qm >> i & 1) sq.push_back(quest[i]);
                CHECK(u.in_level(u.intern(std::move(sp), std::move(sq)), 3));
            }
    }
}

TEST_CASE("set literals round trip") {
    Universe u;
    CHECK(u.literal(u.empty()) == "<[],[]>");
    SetId over = u.intern({0}, {});
    CHECK(u.literal(over) == "<[<[],[]>],[]>");

    u.level(3);
    for (SetId x : u.level(3)) CHECK(u.parse_literal(u.literal(x)) == x);

    CHECK(u.parse_literal(" < [ ] , [ ] > ") == 0);
    CHECK(u.parse_literal("<[<[],[]>,<[],[]>],[]>") == over);  // repeats collapse

    CHECK_THROWS_AS(u.parse_literal("x"), ParseError);
    CHECK_THROWS_AS(u.parse_literal("<[],[]"), ParseError);
    CHECK_THROWS_AS(u.parse_literal("<[],[]>junk"), ParseError);
    CHECK_THROWS_AS(u.parse_literal("<[,],[]>"), ParseError);
}

TEST_CASE("member closure collects everything reachable") {
    Universe u;
    SetId a = u.intern({0}, {0});
    SetId b = u.intern({a}, {});
    SetId c = u.intern({}, {b});
    IdSet closed = u.close_members({c});
    CHECK(closed == IdSet{0, a, b, c});
    CHECK(u.close_members({0}) == IdSet{0});
}

TEST_CASE("fragments expose the clauses to the evaluator") {
    Universe u;
    u.level(2);
    SetId over = u.intern({0}, {});
    SetId under = u.intern({}, {0});
    SetId full = u.intern({0}, {0});
    Fragment f = make_fragment(u, u.level(2));

    CHECK(f.tf.domain.size() == 4);
    CHECK(f.contains(over));
    CHECK_FALSE(f.contains(u.intern({over}, {over})));
    CHECK(f.name_of(u.empty()) == "w0");

    auto val = [&](const std::string& text, std::map<std::string, SetId> env) {
        return eval_in_fragment(f, mf(text), env);
    };
    CHECK(val("x in y", {{"x", u.empty()}, {"y", over}}) == tv_b);
    CHECK(val("x in y", {{"x", u.empty()}, {"y", under}}) == tv_n);
    CHECK(val("x = x", {{"x", over}}) == tv_b);
    CHECK(val("x = y", {{"x", full}, {"y", u.empty()}}) == tv_zero);
    CHECK(val("forall z. ~(z in x)", {{"x", u.empty()}}) == tv_one);
    CHECK(val("exists z. z in x", {{"x", over}}) == tv_b);
    // the equality law holds everywhere, but the self-unequal set drags the
    // value down from plain true to both
    CHECK(val("forall x. forall y. (x = y <=> (forall z. (z in x <=> z in y)))", {}) ==
          tv_b);

    SetId outside = u.intern({over}, {});
    CHECK_THROWS_WITH_AS(eval_in_fragment(f, mf("x in x"), {{"x", outside}}),
                         doctest::Contains("outside the fragment"), ValidationError);
    CHECK_THROWS_WITH_AS(make_fragment(u, {outside}),
                         doctest::Contains("not member-closed"), ValidationError);
}

TEST_CASE("comprehension keeps the asserted and unrefuted members") {
    Universe u;
    u.level(2);
    SetId over = u.intern({0}, {});
    SetId under = u.intern({}, {0});
    SetId full = u.intern({0}, {0});
    SetId big = u.classical_enum_set(u.level(2));
    Fragment f = make_fragment(u, u.close_members({big}));

    CHECK(comprehend(u, f, big, mf("bot"), "y") == u.empty());

    // separating by self-identity is not the identity operation: the
    // self-unequal member drops out of the permitted side
    SetId ident = comprehend(u, f, big, mf("y = y"), "y");
    CHECK(u.get(ident).pos == u.get(big).pos);
    CHECK(u.get(ident).quest == IdSet{u.empty(), under, full});
    CHECK(ident != big);

    // the exponent operators agree with their defining separations
    for (SetId x : {over, under, full, big}) {
        Fragment g = make_fragment(u, u.close_members({u.realm(x), x}));
        CHECK(comprehend(u, g, u.realm(x), mf("!(y in x)"), "y", {{"x", x}}) ==
              u.bang_ext(x));
        CHECK(comprehend(u, g, u.realm(x), mf("?(y in x)"), "y", {{"x", x}}) ==
              u.quest_ext(x));
    }

    CHECK_THROWS_WITH_AS(comprehend(u, f, big, mf("y in p"), "y"),
                         doctest::Contains("unbound variable"), ValidationError);
}

TEST_CASE("extension operators and realm") {
    Universe u;
    SetId over = u.intern({0}, {});
    SetId under = u.intern({}, {0});
    SetId full = u.intern({0}, {0});
    SetId mixed = u.intern({over}, {under, 0});

    for (SetId x : {u.empty(), over, under, full, mixed}) {
        SetId bx = u.bang_ext(x);
        SetId qx = u.quest_ext(x);
        SetId rx = u.realm(x);
        CHECK(u.is_classical(bx));
        CHECK(u.is_classical(qx));
        CHECK(u.is_classical(rx));
        CHECK(u.bang_ext(bx) == bx);  // idempotent on classical sets
        CHECK(u.quest_ext(qx) == qx);
        CHECK(u.get(bx).pos == u.get(x).pos);
        CHECK(u.get(qx).pos == u.get(x).quest);
        CHECK(u.subset_value(bx, rx).truth);
        CHECK(u.subset_value(qx, rx).truth);
    }
    CHECK(u.bang_ext(over) == full);
    CHECK(u.quest_ext(over) == u.empty());
    CHECK(u.realm(over) == full);
}

TEST_CASE("pair unions and bang powersets") {
    Universe u;
    SetId over = u.intern({0}, {});
    SetId under = u.intern({}, {0});
    SetId outer = u.intern({over}, {under});
    CHECK(u.union_set(u.empty()) == u.empty());
    // union folds member extensions sidewise: asserted members of asserted
    // members, permitted members of permitted members
    CHECK(u.union_set(outer) == u.intern({0}, {0}));
    SetId both = u.classical_enum_set({over, under});
    CHECK(u.union_set(both) == u.intern({0}, {0}));

    SetId pw = u.powerset_bang(over);
    CHECK(u.get(pw).pos.size() == 2);  // 2^1 * 2^0
    u.level(2);
    SetId big = u.classical_enum_set(u.level(2));
    SetId pwb = u.powerset_bang(big);
    CHECK(u.get(pwb).pos.size() == 256);
    for (SetId x : u.get(pwb).pos) CHECK(u.subset_value(x, big).truth);

    u.level(3);
    IdSet many(u.level(3).begin(), u.level(3).begin() + 17);
    CHECK_THROWS_WITH_AS(u.powerset_bang(u.classical_enum_set(many)),
                         doctest::Contains("too large"), ValidationError);
}

TEST_CASE("classical pairs rebuild from membership witnesses") {
    Universe u;
    SetId e = u.empty();
    SetId over = u.intern({e}, {});   // e in over has value b
    SetId under = u.intern({}, {e});  // e in under has value n
    SetId ce = u.classical_enum_set({e});

    SUBCASE("the four basic pairs") {
        SetId x = acla_construct(u, ce, e, e, over, e, under);
        CHECK(x == over);
        CHECK(u.bang_ext(x) == ce);
        CHECK(u.quest_ext(x) == e);

        CHECK(acla_construct(u, e, ce, e, over, e, under) == under);
        CHECK(acla_construct(u, ce, ce, e, over, e, under) == ce);
        CHECK(acla_construct(u, e, e, e, over, e, under) == e);
    }

    SUBCASE("every pair over the two-element base") {
        std::vector<SetId> base;
        for (int mask = 0; mask < 4; mask++) {
            IdSet members;
            if (mask & 1) members.push_back(e);
            if (mask & 2) members.push_back(ce);
            base.push_back(u.classical_enum_set(members));
        }
        for (SetId a : base)
            for (SetId b : base) {
                SetId x = acla_construct(u, a, b, e, over, e, under);
                CHECK(u.bang_ext(x) == a);
                CHECK(u.quest_ext(x) == b);
                CHECK(x == u.intern(u.get(a).pos, u.get(b).pos));
            }
    }

    SUBCASE("precondition failures name the offender") {
        CHECK_THROWS_WITH_AS(acla_construct(u, over, e, e, over, e, under),
                             doctest::Contains("must be classical"), ValidationError);
        CHECK_THROWS_WITH_AS(acla_construct(u, ce, e, e, ce, e, under),
                             doctest::Contains("value b, got 1"), ValidationError);
        CHECK_THROWS_WITH_AS(acla_construct(u, ce, e, e, over, e, e),
                             doctest::Contains("value n, got 0"), ValidationError);
    }
}

TEST_CASE("the truth value sets quote evaluation results") {
    Universe u;
    SetId om = omega_set(u);
    CHECK(u.get(om).pos.size() == 4);
    CHECK(u.is_classical(om));

    std::map<std::string, SetId> names;
    for (SetId x : u.get(om).pos) {
        std::string n = omega_name(u, x);
        CHECK(n != "");
        names[n] = x;
    }
    CHECK(names.size() == 4);
    CHECK(names["0"] == u.empty());
    CHECK(omega_member(u, tv_one) == names["1"]);
    CHECK(omega_name(u, u.intern({om}, {})) == "");

    // the encoded value can be read back off by asking whether the empty
    // set got in
    for (TruthValue v : tv_all) {
        SetId q = omega_member(u, v);
        CHECK(u.mem_value(u.empty(), q) == v);
        CHECK(omega_member(u, u.mem_value(u.empty(), q)) == q);
    }

    u.level(2);
    Fragment f = make_fragment(u, u.level(2));
    SetId over = u.intern({0}, {});
    CHECK(truth_value_of(u, f, mf("~bot")) == names["1"]);
    CHECK(truth_value_of(u, f, mf("bot")) == names["0"]);
    CHECK(truth_value_of(u, f, mf("x in y"), {{"x", u.empty()}, {"y", over}}) ==
          names["b"]);
    CHECK(truth_value_of(u, f, mf("forall x. x = x")) == names["b"]);
}
