#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "slicestar/domain.hpp"
#include "slicestar/report.hpp"

namespace slicestar {

/// Everything a suite run needs: the domain under test, sampling sizes, the
/// tolerances, and the selected named checks.
struct Scenario {
    std::string name = "ball-polynomials";
    std::uint64_t seed = 7;
    int units = 50;          // unit sample for stem and star checks
    int domain_units = 200;  // unit sample for domain checkers
    double max_step = 0.05;
    double grid_h = 0.05;
    json domain_spec;  // {"name": ..., "params": {...}}
    /// Optional explicit function specs; replaces the seeded polynomial pool.
    json functions = json::array();
    json tolerances = json::object();
    std::vector<std::string> checks;
    /// Expected verdict per check for bundled counterexample scenarios.
    json expected = json::object();
};

/// Bundled scenarios: "ball-polynomials", "nonaxisym-union",
/// "single-slice-tube".
Scenario bundled_scenario(const std::string& name);

Scenario scenario_from_json(const json& j);
json scenario_to_json(const Scenario& s);

/// Names of all runnable checks, in canonical order.
const std::vector<std::string>& known_checks();

struct SuiteResult {
    json report;
    bool any_violation = false;
    std::size_t expected_mismatches = 0;
};

/// Runs every selected check and assembles a deterministic report (the
/// wall_time_ms field is the only run-dependent part).
SuiteResult run_suite(const Scenario& scenario);

}  // namespace slicestar
