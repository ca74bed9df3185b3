#include "slicestar/reg_check.hpp"

#include "doctest.h"

using namespace slicestar;

namespace {

Domain unit_ball() { return make_euclidean_ball(std::vector<double>{0.0}, 1.0); }

}  // namespace

TEST_CASE("quadratics sit at the rounding floor") {
    const Domain ball = unit_ball();
    const PathSliceFn sq = make_polynomial(
        {Quaternion{}, Quaternion{}, Quaternion(1.0)}, ball);
    const CRReport report =
        cr_residual(sq, ball, sphere_sample(12, 7), 17, 1e-3, false);
    CHECK(report.evaluated > 0);
    CHECK(report.max_residual <= 1e-5);  // loose bound; rounding noise in practice
    CHECK(report.max_residual <= 1e-8);
}

TEST_CASE("constants have zero residual exactly") {
    const Domain ball = unit_ball();
    const PathSliceFn c = make_constant({0.3, 1, -2, 0.5}, ball);
    const CRReport report =
        cr_residual(c, ball, sphere_sample(6, 7), 9, 1e-3, false);
    CHECK(report.max_residual == 0.0);
}

TEST_CASE("the anti-holomorphic witness fails by a unit margin") {
    const Domain ball = unit_ball();
    const PathSliceFn anti = make_conj_identity(ball);
    const CRReport report =
        cr_residual(anti, ball, sphere_sample(6, 7), 9, 1e-3, false);
    CHECK(report.max_residual == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("second order decay on the truncated exponential") {
    const Domain ball = unit_ball();
    const PathSliceFn smooth = make_exp_series(ball);
    const CRReport report =
        cr_residual(smooth, ball, sphere_sample(12, 7), 17, 1e-3, true);
    REQUIRE(report.evaluated > 0);
    CHECK(report.max_residual > 1e-10);  // visibly above rounding noise
    const double ratio = report.max_residual / report.max_residual_half;
    CHECK(ratio >= 3.5);
    CHECK(ratio <= 4.5);
    CHECK(report.order_estimate == doctest::Approx(2.0).epsilon(0.2));
}

TEST_CASE("stencils that leave the domain are skipped, not evaluated") {
    const Domain ball = unit_ball();
    const PathSliceFn id = make_identity(ball);
    std::size_t skipped = 0;
    const std::vector<ComplexPoint> grid = {
        {{0.0, 0.5}},     // interior
        {{0.9999, 0.0}},  // boundary adjacent: stencil escapes
        {{2.0, 0.0}},     // outside entirely
    };
    const auto rows = cr_residual_slice(id, ball, unit_i(), grid, 1e-3, &skipped);
    CHECK(rows.size() == 1);
    CHECK(skipped == 2);
}

TEST_CASE("star products of low-degree polynomials stay regular") {
    const Domain ball = unit_ball();
    const auto units = sphere_sample(12, 7);
    const StarHypothesis hyp =
        StarHypothesis::override_flag("euclidean ball about a real center");
    const PathSliceFn f = make_identity(ball);
    const PathSliceFn g = make_identity(ball);
    const CheckReport report = verify_regular_closed_under_star(
        f, g, ball, units, 9, 1e-3, 1e-8, hyp);
    CHECK(report.passed());
    CHECK(report.resolution["max_residual"].get<double>() <= 1e-8);

    // constants against anything are exact
    const PathSliceFn c = make_constant({1, 0.5, 0, -1}, ball);
    CHECK(verify_regular_closed_under_star(c, f, ball, units, 9, 1e-3, 1e-8, hyp)
              .passed());
}
