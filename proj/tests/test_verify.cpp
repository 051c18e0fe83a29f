#include <chrono>

#include "doctest.h"
#include "nclogic/error.hpp"
#include "nclogic/verify.hpp"

using namespace nclogic;

TEST_CASE("battery reports serialize and count failures") {
    BatteryReport r;
    r.check = "demo";
    r.params = {{"level", "2"}};
    r.cases = 3;
    CHECK(r.ok());
    for (int i = 0; i < 15; i++) r.fail("boom " + std::to_string(i));
    CHECK_FALSE(r.ok());
    CHECK(r.failure_count == 15);
    CHECK(r.failures.size() == 10);  // storage is capped, the count is not

    auto j = report_to_json(r);
    CHECK(j["check"] == "demo");
    CHECK(j["params"]["level"] == "2");
    CHECK(j["cases"] == 3);
    CHECK(j["failure_count"] == 15);
    CHECK(j["ok"] == false);
}

TEST_CASE("level structure battery") {
    Universe u;
    BatteryReport r = verify_levels(u);
    CHECK(r.ok());
    CHECK(r.cases > 6500);  // dominated by the submask closure sweep
}

TEST_CASE("equality law battery at the small level") {
    Universe u;
    BatteryReport r = verify_extensionality(u, 2, 11);
    CHECK(r.ok());
    CHECK(r.cases == 16 + 16);
}

TEST_CASE("subset and equality truth-condition battery") {
    Universe u;
    BatteryReport r = verify_subset_equality_laws(u, 2, 11);
    CHECK(r.ok());
    CHECK(r.cases == 16 * 8 + 16);
}

TEST_CASE("pairing, union, powerset and superset batteries at the small level") {
    Universe u;
    CHECK(verify_pairing(u, 2, 3).ok());
    CHECK(verify_union(u, 2, 3).ok());
    CHECK(verify_powerset(u, 2, 3).ok());
    CHECK(verify_classical_superset(u, 2, 3).ok());
}

TEST_CASE("separation battery") {
    Universe u;
    BatteryReport r = verify_comprehension(u, 5);
    CHECK(r.ok());
    CHECK(r.cases > 500000);
}

TEST_CASE("image battery") {
    Universe u;
    BatteryReport r = verify_replacement(u);
    CHECK(r.ok());
}

TEST_CASE("pair reconstruction battery") {
    Universe u;
    BatteryReport r = verify_acla(u, 9);
    CHECK(r.ok());
    CHECK(r.cases == 16 + 100);
}

TEST_CASE("truth value set battery") {
    Universe u;
    BatteryReport r = verify_omega(u, 9);
    CHECK(r.ok());
    CHECK(r.cases == 2 + 4 + 50);
}

TEST_CASE("battery dispatch by axiom name") {
    Universe u;
    CHECK(axiom_names().size() == 7);
    for (const std::string& name : axiom_names()) {
        Universe fresh;
        BatteryReport r = verify_axiom(fresh, name, 2, 1);
        CHECK(r.ok());
        CHECK(r.check != "");
    }
    CHECK_THROWS_WITH_AS(verify_axiom(u, "choice", 2, 1),
                         doctest::Contains("no battery named"), ValidationError);
}

TEST_CASE("connective tables match the frozen references") {
    BatteryReport r = verify_tables();
    CHECK(r.ok());
    // 4 unary tables of 4 entries, 6 binary tables of 16, one extra unary
    CHECK(r.cases == 5 * 4 + 6 * 16);
}

TEST_CASE("statement schemas stay designated") {
    BatteryReport r = verify_statements(0);
    CHECK(r.ok());
    CHECK(r.cases > 500);
}

TEST_CASE("soundness battery wraps the harness") {
    BatteryReport r = verify_soundness(40, 3, 2);
    CHECK(r.ok());
    CHECK(r.cases > 0);
}

TEST_CASE("the full sweep is deterministic and scheduling independent") {
    AggregateResult serial = run_all_batteries(3, 50'000'000, 1);
    CHECK(serial.ok());
    CHECK(serial.reports.size() == 20);
    AggregateResult parallel = run_all_batteries(3, 50'000'000, 4);
    CHECK(aggregate_to_json(serial, 3).dump(2) == aggregate_to_json(parallel, 3).dump(2));
    CHECK_THROWS_AS(run_all_batteries(3, 50'000'000, 0), ValidationError);
}
