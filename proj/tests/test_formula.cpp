#include "doctest.h"
#include "nclogic/error.hpp"
#include "nclogic/parser.hpp"
#include "nclogic/randgen.hpp"

using namespace nclogic;

static Signature test_sig() {
    Signature sig;
    sig.relations = {{"p", 0}, {"q", 0}, {"r", 0}, {"R", 1}, {"S", 2}, {"in", 2}};
    sig.constants = {"c", "d"};
    return sig;
}

TEST_CASE("signature sanity") {
    Signature sig = test_sig();
    CHECK(sig.check().empty());
    sig.constants.insert("R");
    CHECK(!sig.check().empty());

    Signature bad;
    bad.relations["forall"] = 1;
    CHECK(!bad.check().empty());
}

TEST_CASE("parse shapes") {
    Signature sig = test_sig();
    auto f = parse_formula("p() & q() | r()", sig);
    CHECK(f->kind == FKind::Or);
    CHECK(f->lhs->kind == FKind::And);

    f = parse_formula("p() -> q() -> r()", sig);
    CHECK(f->kind == FKind::Imp);
    CHECK(f->rhs->kind == FKind::Imp);

    f = parse_formula("~p() & q()", sig);
    CHECK(f->kind == FKind::And);
    CHECK(f->lhs->kind == FKind::Neg);

    f = parse_formula("p() & forall x. q() | r()", sig);
    CHECK(f->kind == FKind::And);
    CHECK(f->rhs->kind == FKind::Forall);
    CHECK(f->rhs->lhs->kind == FKind::Or);

    f = parse_formula("x in c", sig);
    CHECK(f->kind == FKind::Atom);
    CHECK(f->name == "in");
    CHECK(f->args[0] == var("x"));
    CHECK(f->args[1] == cons("c"));

    f = parse_formula("x = y", sig);
    CHECK(f->kind == FKind::Eq);

    f = parse_formula("o p()", sig);
    CHECK(f->kind == FKind::Circ);
    f = parse_formula("not p()", sig);
    CHECK(f->kind == FKind::ClassNeg);
    f = parse_formula("!?~p()", sig);
    CHECK(f->kind == FKind::Bang);
    CHECK(f->lhs->kind == FKind::Quest);
    CHECK(f->lhs->lhs->kind == FKind::Neg);

    f = parse_formula("p() => q() <=> r()", sig);
    // <=> binds loosest
    CHECK(f->kind == FKind::StrongIff);
    CHECK(f->lhs->kind == FKind::StrongImp);

    f = parse_formula("~ x = y", sig);
    CHECK(f->kind == FKind::Neg);
    CHECK(f->lhs->kind == FKind::Eq);
}

TEST_CASE("parse errors carry byte offsets") {
    Signature sig = test_sig();
    auto offset_of = [&](const std::string& text) -> size_t {
        try {
            parse_formula(text, sig);
        } catch (const ParseError& e) {
            return e.offset;
        }
        return (size_t)-1;
    };
    CHECK(offset_of("p( & q") == 3);
    CHECK(offset_of("p() ->") == 6);
    CHECK(offset_of("w(x)") == 0);        // unknown relation
    CHECK(offset_of("R(x, y)") == 0);     // arity mismatch
    CHECK(offset_of("x = y = z") == 6);   // trailing '='
    CHECK(offset_of("forall c. p()") == 7);
    CHECK(offset_of("p() @ q()") == 4);
    CHECK(offset_of("R(p)") == 2);        // relation name in term position
}

TEST_CASE("inference mode grows the signature") {
    Signature sig;
    auto f = parse_formula_infer("w(x, y) & w(x, x)", sig);
    CHECK(sig.relations.at("w") == 2);
    CHECK(f->kind == FKind::And);
    CHECK_THROWS_AS(parse_formula_infer("w(x)", sig), ParseError);  // arity now fixed
}

TEST_CASE("render round trips") {
    Signature sig = test_sig();
    const char* samples[] = {
        "p()",
        "R(x)",
        "S(x, c)",
        "x = y",
        "x in y",
        "bot",
        "~p()",
        "not p()",
        "!p()",
        "?p()",
        "o p()",
        "p() & q()",
        "p() & q() & r()",
        "p() & (q() & r())",
        "p() | q() & r()",
        "(p() | q()) & r()",
        "p() -> q() -> r()",
        "(p() -> q()) -> r()",
        "p() <-> q()",
        "p() => q()",
        "p() <=> q()",
        "forall x. R(x)",
        "exists x. R(x) & p()",
        "(forall x. R(x)) & p()",
        "~(forall x. R(x))",
        "forall x. forall y. S(x, y) -> S(y, x)",
        "forall x'. R(x')",
    };
    for (auto s : samples) {
        auto f = parse_formula(s, sig);
        std::string canon = render(f);
        auto g = parse_formula(canon, sig);
        CHECK_MESSAGE(equal(f, g), "render/parse mismatch for: ", s, " => ", canon);
        CHECK(render(g) == canon);
    }
}

TEST_CASE("render/parse identity on random formulas") {
    Signature sig = test_sig();
    FormulaGenOptions opt;
    opt.max_depth = 4;
    for (uint64_t i = 0; i < 500; i++) {
        Rng rng(mix_seed(7, i, 0));
        auto f = random_formula(rng, sig, opt);
        auto g = parse_formula(render(f), sig);
        CHECK_MESSAGE(equal(f, g), "round trip failed: ", render(f));
    }
}

TEST_CASE("desugar") {
    Signature sig = test_sig();
    auto d = [&](const char* s) { return render(desugar(parse_formula(s, sig))); };
    CHECK(d("p() => q()") == "(p() -> q()) & (~q() -> ~p())");
    CHECK(d("p() <=> q()") == "(p() <-> q()) & (~p() <-> ~q())");
    CHECK(d("not p()") == "p() -> bot");
    CHECK(d("!p()") == "~(p() -> bot)");
    CHECK(d("?p()") == "~p() -> bot");
    CHECK(d("o p()") == "~(p() -> bot) <-> ~p() -> bot");

    FormulaGenOptions opt;
    for (uint64_t i = 0; i < 300; i++) {
        Rng rng(mix_seed(8, i, 0));
        auto f = random_formula(rng, sig, opt);
        auto once = desugar(f);
        CHECK(sugar_free(once));
        CHECK(equal(once, desugar(once)));          // idempotent
        CHECK(free_vars(f) == free_vars(once));     // free variables preserved
    }
}

TEST_CASE("free variables and substitution") {
    Signature sig = test_sig();
    auto f = parse_formula("forall x. S(x, y)", sig);
    CHECK(free_vars(f) == std::set<std::string>{"y"});
    CHECK(!is_closed(f));
    CHECK(is_closed(parse_formula("forall x. R(x)", sig)));

    // capture-avoiding: the binder renames before y lands under it
    auto g = substitute(parse_formula("forall y. S(x, y)", sig), "x", var("y"));
    CHECK(render(g) == "forall y'. S(y, y')");

    // no capture risk: constant substitution leaves binders alone
    auto h = substitute(parse_formula("forall y. S(x, y)", sig), "x", cons("c"));
    CHECK(render(h) == "forall y. S(c, y)");

    // substituting a variable for itself is the identity
    FormulaGenOptions opt;
    for (uint64_t i = 0; i < 200; i++) {
        Rng rng(mix_seed(9, i, 0));
        auto r = random_formula(rng, sig, opt);
        CHECK(alpha_equal(r, substitute(r, "x", var("x"))));
    }

    // bound occurrences are untouched
    auto k = substitute(parse_formula("R(x) & forall x. R(x)", sig), "x", cons("c"));
    CHECK(render(k) == "R(c) & (forall x. R(x))");
}

TEST_CASE("alpha equality") {
    Signature sig = test_sig();
    CHECK(alpha_equal(parse_formula("forall x. R(x)", sig),
                      parse_formula("forall y. R(y)", sig)));
    CHECK(alpha_equal(parse_formula("forall x. exists y. S(x, y)", sig),
                      parse_formula("forall y. exists x. S(y, x)", sig)));
    CHECK(!alpha_equal(parse_formula("forall x. S(x, y)", sig),
                       parse_formula("forall x. S(x, z)", sig)));
    CHECK(!alpha_equal(parse_formula("forall x. exists y. S(x, y)", sig),
                       parse_formula("forall x. exists y. S(y, x)", sig)));
}
