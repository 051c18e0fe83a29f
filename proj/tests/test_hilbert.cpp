#include "doctest.h"
#include "nclogic/error.hpp"
#include "nclogic/hilbert.hpp"
#include "nclogic/json_io.hpp"
#include "nclogic/parser.hpp"
#include "nclogic/search.hpp"

using namespace nclogic;

static Signature hsig() {
    Signature sig;
    sig.relations = {{"p", 0}, {"q", 0}, {"r", 0}, {"R", 1}, {"S", 2}};
    sig.constants = {"c"};
    return sig;
}

TEST_CASE("schema instantiation") {
    Signature sig = hsig();
    auto p = parse_formula("p()", sig);
    auto q = parse_formula("q()", sig);

    Instantiation i15;
    i15.phi = p;
    CHECK(render(instantiate_schema(15, i15)) == "~~p() <-> p()");

    CHECK(render(instantiate_schema(19, {})) == "~bot");

    Instantiation i22;
    i22.x = "x";
    i22.y = "y";
    CHECK(render(instantiate_schema(22, i22)) == "~x = y -> ~y = x");

    Instantiation i1;
    i1.phi = p;
    i1.psi = q;
    CHECK(render(instantiate_schema(1, i1)) == "p() -> q() -> p()");

    Instantiation i11;
    i11.phi = parse_formula("R(x)", sig);
    i11.x = "x";
    i11.t = cons("c");
    CHECK(render(instantiate_schema(11, i11)) == "(forall x. R(x)) -> R(c)");

    // substitution renames the inner binder rather than capturing
    Instantiation cap;
    cap.phi = parse_formula("exists y. S(x, y)", sig);
    cap.x = "x";
    cap.t = var("y");
    auto inst = instantiate_schema(11, cap);
    CHECK(render(inst) == "(forall x. exists y. S(x, y)) -> (exists y'. S(y, y'))");
    Signature just_s;
    just_s.relations = {{"S", 2}};
    CHECK(validity_bounded(just_s, inst, 2, default_budget).valid);

    try {
        instantiate_schema(1, {});
        CHECK(false);
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("axiom 1 (phi -> (psi -> phi)) needs metavariable") !=
              std::string::npos);
    }
    Instantiation no_t;
    no_t.phi = p;
    no_t.x = "x";
    CHECK_THROWS_WITH_AS(instantiate_schema(11, no_t),
                         "axiom 11 ((forall x. phi) -> phi[x := t]) needs metavariable \"t\"",
                         ValidationError);
    CHECK_THROWS_AS(instantiate_schema(0, {}), ValidationError);
    CHECK_THROWS_AS(instantiate_schema(23, {}), ValidationError);
    for (int id = 1; id <= schema_count; id++) {
        CHECK(schema_statement(id)[0] != '\0');
        // every declared metavariable is enforced
        Instantiation full;
        full.phi = p;
        full.psi = q;
        full.chi = parse_formula("r()", sig);
        full.x = "x";
        full.y = "y";
        full.t = var("z");
        CHECK(instantiate_schema(id, full) != nullptr);
    }
}

static Proof mp_proof() {
    Proof pr;
    pr.sig = hsig();
    pr.hypotheses = {parse_formula("p()", pr.sig), parse_formula("p() -> q()", pr.sig)};
    pr.lines = {
        {parse_formula("p()", pr.sig), HypJ{1}},
        {parse_formula("p() -> q()", pr.sig), HypJ{2}},
        {parse_formula("q()", pr.sig), MPJ{1, 2}},
    };
    return pr;
}

TEST_CASE("check_proof accepts modus ponens") {
    auto v = check_proof(mp_proof());
    CHECK(v.ok);
    CHECK(v.bad_line == 0);
    CHECK(v.message.empty());
}

TEST_CASE("check_proof rejections carry the line and reason") {
    Proof pr = mp_proof();

    SUBCASE("forward reference") {
        pr.lines[0].just = MPJ{2, 3};
        auto v = check_proof(pr);
        CHECK(!v.ok);
        CHECK(v.bad_line == 1);
        CHECK(v.message.find("not an earlier line") != std::string::npos);
    }
    SUBCASE("hypothesis out of range") {
        pr.lines[1].just = HypJ{3};
        auto v = check_proof(pr);
        CHECK(v.bad_line == 2);
        CHECK(v.message.find("out of range") != std::string::npos);
    }
    SUBCASE("claim differs from hypothesis") {
        pr.lines[0].just = HypJ{2};
        auto v = check_proof(pr);
        CHECK(v.bad_line == 1);
    }
    SUBCASE("mp against a non-implication") {
        pr.lines[2].just = MPJ{1, 1};
        auto v = check_proof(pr);
        CHECK(v.bad_line == 3);
        CHECK(v.message.find("not an implication") != std::string::npos);
    }
    SUBCASE("wrong axiom instance") {
        Instantiation i;
        i.phi = parse_formula("q()", pr.sig);
        pr.lines[0].just = AxiomJ{19, i};
        auto v = check_proof(pr);
        CHECK(v.bad_line == 1);
        CHECK(v.message.find("axiom 19") != std::string::npos);
        CHECK(v.message.find("expected ~bot") != std::string::npos);
    }
}

TEST_CASE("a closed equality theorem from the axioms") {
    Proof pr;
    pr.sig = hsig();
    auto f = [&](const char* s) { return parse_formula(s, pr.sig); };
    Instantiation i13;
    i13.x = "x";
    Instantiation i1;
    i1.phi = f("x = x");
    i1.psi = f("~bot");
    Instantiation i11;
    i11.phi = f("x = x");
    i11.x = "x";
    i11.t = cons("c");
    pr.lines = {
        {f("~bot"), AxiomJ{19, {}}},
        {f("x = x"), AxiomJ{13, i13}},
        {f("x = x -> ~bot -> x = x"), AxiomJ{1, i1}},
        {f("~bot -> x = x"), MPJ{2, 3}},
        {f("~bot -> forall x. x = x"), GenImpJ{4}},
        {f("(forall x. x = x) -> c = c"), AxiomJ{11, i11}},
        {f("forall x. x = x"), MPJ{1, 5}},
        {f("c = c"), MPJ{7, 6}},
    };
    auto v = check_proof(pr);
    CHECK_MESSAGE(v.ok, "line ", v.bad_line, ": ", v.message);

    SUBCASE("generalization side condition is enforced") {
        // reroute lines 3..5 so the antecedent mentions x freely
        Instantiation i;
        i.phi = f("x = x");
        i.psi = f("R(x)");
        pr.lines[2] = {f("x = x -> R(x) -> x = x"), AxiomJ{1, i}};
        pr.lines[3] = {f("R(x) -> x = x"), MPJ{2, 3}};
        pr.lines[4].claim = f("R(x) -> forall x. x = x");
        auto bad = check_proof(pr);
        CHECK(!bad.ok);
        CHECK(bad.bad_line == 5);
        CHECK(bad.message.find("side condition") != std::string::npos);
    }
    SUBCASE("unrelated extra lines do not disturb checking") {
        pr.lines.insert(pr.lines.begin() + 1, {f("~bot"), AxiomJ{19, {}}});
        // shift references past the insertion point
        pr.lines[4].just = MPJ{3, 4};
        pr.lines[5].just = GenImpJ{5};
        pr.lines[7].just = MPJ{1, 6};
        pr.lines[8].just = MPJ{8, 7};
        CHECK(check_proof(pr).ok);
    }
}

TEST_CASE("existential generalization") {
    Proof pr;
    pr.sig = hsig();
    pr.hypotheses = {parse_formula("R(x) -> p()", pr.sig)};
    pr.lines = {
        {parse_formula("R(x) -> p()", pr.sig), HypJ{1}},
        {parse_formula("(exists x. R(x)) -> p()", pr.sig), GenExistsJ{1}},
    };
    CHECK(check_proof(pr).ok);

    // binding a variable free in the consequent must fail
    pr.hypotheses = {parse_formula("p() -> R(x)", pr.sig)};
    pr.lines = {
        {parse_formula("p() -> R(x)", pr.sig), HypJ{1}},
        {parse_formula("(exists x. p()) -> R(x)", pr.sig), GenExistsJ{1}},
    };
    auto v = check_proof(pr);
    CHECK(!v.ok);
    CHECK(v.message.find("side condition") != std::string::npos);
}

TEST_CASE("discharging hypotheses yields implication proofs") {
    Proof pr;
    pr.sig = hsig();
    auto f = [&](const char* s) { return parse_formula(s, pr.sig); };
    pr.hypotheses = {f("p() -> q()"), f("q() -> r()"), f("p()")};
    pr.lines = {
        {f("p()"), HypJ{3}},
        {f("p() -> q()"), HypJ{1}},
        {f("q()"), MPJ{1, 2}},
        {f("q() -> r()"), HypJ{2}},
        {f("r()"), MPJ{3, 4}},
    };
    REQUIRE(check_proof(pr).ok);

    const char* want[] = {
        "p() -> r()",
        "(q() -> r()) -> p() -> r()",
        "(p() -> q()) -> (q() -> r()) -> p() -> r()",
    };
    for (int round = 0; round < 3; round++) {
        pr = discharge_last_hypothesis(pr);
        auto v = check_proof(pr);
        REQUIRE_MESSAGE(v.ok, "round ", round, " line ", v.bad_line, ": ", v.message);
        CHECK(render(pr.lines.back().claim) == want[round]);
        CHECK((int)pr.hypotheses.size() == 2 - round);
    }

    Proof empty;
    empty.sig = hsig();
    CHECK_THROWS_AS(discharge_last_hypothesis(empty), ValidationError);
}

TEST_CASE("proofs load from json") {
    json j = json::parse(R"js({
      "hypotheses": ["p()", "p() -> q()"],
      "steps": [
        {"formula": "p()", "hyp": 1},
        {"formula": "p() -> q()", "hyp": 2},
        {"formula": "q()", "mp": [1, 2]},
        {"formula": "q() -> p() -> q()", "axiom": 1, "inst": {"phi": "q()", "psi": "p()"}},
        {"formula": "p() -> q()", "mp": [3, 4]}
      ]
    })js");
    Proof pr = proof_from_json(j);
    CHECK(pr.sig.relations.at("p") == 0);
    CHECK(check_proof(pr).ok);

    json with_sig = j;
    with_sig["signature"] = {{"relations", {{"p", 0}, {"q", 0}}}, {"constants", json::array()}};
    CHECK(check_proof(proof_from_json(with_sig)).ok);

    json quant = json::parse(R"js({
      "steps": [
        {"formula": "~bot", "axiom": 19},
        {"formula": "x = x", "axiom": 13, "inst": {"x": "x"}},
        {"formula": "x = x -> ~bot -> x = x", "axiom": 1,
         "inst": {"phi": "x = x", "psi": "~bot"}},
        {"formula": "~bot -> x = x", "mp": [2, 3]},
        {"formula": "~bot -> forall x. x = x", "gen_imp": 4},
        {"formula": "forall x. x = x", "mp": [1, 5]}
      ]
    })js");
    CHECK(check_proof(proof_from_json(quant)).ok);

    CHECK_THROWS_AS(proof_from_json(json::parse(R"js({"steps": [{"formula": "p()"}]})js")),
                    ValidationError);
    CHECK_THROWS_AS(proof_from_json(json::parse(
                        R"js({"steps": [{"formula": "p()", "hyp": 1, "mp": [1, 1]}]})js")),
                    ValidationError);
    CHECK_THROWS_AS(proof_from_json(json::parse(R"js({"steps": [{"axiom": 19}]})js")),
                    ValidationError);
}

TEST_CASE("soundness harness finds no failures") {
    auto rep = soundness_harness(30, 3, 7);
    CHECK(rep.ok());
    CHECK(rep.schema_instances == 30u * schema_count);
    CHECK(rep.rule_derivations == 90u);
    CHECK_THROWS_AS(soundness_harness(0, 3, 7), ValidationError);
    CHECK_THROWS_AS(soundness_harness(10, 9, 7), ValidationError);
}

TEST_CASE("every schema is designated in every small model") {
    // propositional instantiation over nullary atoms, exhaustive to size 2;
    // quantifier schemas over a unary relation
    Signature sig;
    sig.relations = {{"p", 0}, {"q", 0}, {"r", 0}, {"R", 1}};
    auto f = [&](const char* s) { return parse_formula(s, sig); };
    Instantiation in;
    in.phi = f("p()");
    in.psi = f("q()");
    in.chi = f("r()");
    in.x = "x";
    in.y = "y";
    in.t = var("z");
    for (int id = 1; id <= schema_count; id++) {
        Instantiation use = in;
        if (id == 11 || id == 12 || id == 14 || id == 20 || id == 21) use.phi = f("R(x)");
        auto inst = instantiate_schema(id, use);
        auto res = validity_bounded(sig, inst, 2, default_budget);
        CHECK_MESSAGE(res.valid, "axiom ", id, " refuted: ", render(inst));
    }
}
