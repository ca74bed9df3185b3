#include "slicestar/harness.hpp"

#include "doctest.h"
#include "slicestar/errors.hpp"
#include "slicestar/json_io.hpp"

using namespace slicestar;

namespace {

json strip_timing(json j) {
    j.erase("wall_time_ms");
    return j;
}

}  // namespace

TEST_CASE("bundled scenarios resolve and serialize") {
    for (const char* name :
         {"ball-polynomials", "nonaxisym-union", "single-slice-tube"}) {
        const Scenario s = bundled_scenario(name);
        CHECK(!s.checks.empty());
        const Scenario round = scenario_from_json(scenario_to_json(s));
        CHECK(round.name == s.name);
        CHECK(round.checks == s.checks);
        CHECK(round.seed == s.seed);
    }
    CHECK_THROWS_AS(bundled_scenario("no-such"), UnknownDomain);
}

TEST_CASE("scenario validation") {
    json j = scenario_to_json(bundled_scenario("ball-polynomials"));
    j["units"] = 1;
    CHECK_THROWS_AS(scenario_from_json(j), Error);
    j = scenario_to_json(bundled_scenario("ball-polynomials"));
    j["checks"] = json::array({"not-a-check"});
    CHECK_THROWS_AS(run_suite(scenario_from_json(j)), Error);
}

TEST_CASE("every known check runs from a scenario") {
    Scenario s = bundled_scenario("ball-polynomials");
    CHECK(s.checks == known_checks());
}

TEST_CASE("a small suite is deterministic and green") {
    Scenario s = bundled_scenario("ball-polynomials");
    s.units = 20;
    s.domain_units = 40;
    s.checks = {"eq-fcg", "eq-fgamma-conj", "eq-fgamma-R", "eq-lfo1",
                "eq-stemcoincide", "real-path-connected",
                "weakly-axially-symmetric"};
    const SuiteResult a = run_suite(s);
    const SuiteResult b = run_suite(s);
    CHECK(!a.any_violation);
    CHECK(a.expected_mismatches == 0);
    CHECK(strip_timing(a.report).dump() == strip_timing(b.report).dump());
    for (const auto& [name, entry] : a.report["checks"].items()) {
        CHECK(entry["verdict"] == "no-violation-found");
    }
}

TEST_CASE("the tube scenario reports its violations as expected") {
    Scenario s = bundled_scenario("single-slice-tube");
    s.domain_units = 100;
    const SuiteResult result = run_suite(s);
    CHECK(result.any_violation);  // the counterexample is the point
    CHECK(result.expected_mismatches == 0);
    CHECK(result.report["checks"]["stem-preserving"]["verdict"] ==
          "violation-found");
    CHECK(result.report["checks"]["real-path-connected"]["verdict"] ==
          "no-violation-found");
    CHECK(result.report["checks"]["weakly-axially-symmetric"]["verdict"] ==
          "violation-found");
}

TEST_CASE("different seeds change the sampled material") {
    Scenario s = bundled_scenario("ball-polynomials");
    s.units = 20;
    s.domain_units = 40;
    s.checks = {"eq-fcg"};
    Scenario s2 = s;
    s2.seed = 8;
    const json a = strip_timing(run_suite(s).report);
    const json b = strip_timing(run_suite(s2).report);
    CHECK(a.dump() != b.dump());
}
