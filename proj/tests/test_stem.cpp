#include "slicestar/stem.hpp"

#include <random>

#include "doctest.h"
#include "slicestar/errors.hpp"

using namespace slicestar;

namespace {

const Quaternion kQi{0, 1, 0, 0};

Domain unit_ball() { return make_euclidean_ball(std::vector<double>{0.0}, 1.0); }
Domain wide_ball() { return make_euclidean_ball(std::vector<double>{0.0}, 4.0); }

bool stem_close(const StemValue& a, const StemValue& b, double tol) {
    return abs(a.F1 - b.F1) <= tol && abs(a.F2 - b.F2) <= tol;
}

}  // namespace

TEST_CASE("two by two inverse, antipodal pair frozen values") {
    // [[1, i], [1, -i]]^{-1} = [[1/2, 1/2], [-i/2, i/2]]
    const Mat2Q m = two_by_two_inverse(unit_i(), -unit_i());
    CHECK(approx_equal(m.a, Quaternion(0.5), 1e-15));
    CHECK(approx_equal(m.b, Quaternion(0.5), 1e-15));
    CHECK(approx_equal(m.c, -0.5 * kQi, 1e-15));
    CHECK(approx_equal(m.d, 0.5 * kQi, 1e-15));
}

TEST_CASE("two by two inverse, skew pair frozen values") {
    // (j - i)/2 times [[i, -j], [1, -1]]
    const Mat2Q m = two_by_two_inverse(unit_i(), unit_j());
    CHECK(approx_equal(m.a, Quaternion{0.5, 0, 0, -0.5}, 1e-15));  // (1 - k)/2
    CHECK(approx_equal(m.b, Quaternion{0.5, 0, 0, 0.5}, 1e-15));   // (1 + k)/2
    CHECK(approx_equal(m.c, Quaternion{0, -0.5, 0.5, 0}, 1e-15));  // (j - i)/2
    CHECK(approx_equal(m.d, Quaternion{0, 0.5, -0.5, 0}, 1e-15));  // (i - j)/2
}

TEST_CASE("the inverse actually inverts, for skew pairs too") {
    for (const auto& [I, J] : std::vector<std::pair<UnitImaginary, UnitImaginary>>{
             {unit_i(), -unit_i()},
             {unit_i(), unit_j()},
             {unit_i(), unit_k()},
             {make_unit(1, 1, 0), make_unit(0, 1, -1)}}) {
        const Mat2Q m = two_by_two_inverse(I, J);
        const Mat2Q a{Quaternion(1.0), I.as_quaternion(), Quaternion(1.0),
                      J.as_quaternion()};
        const Mat2Q prod = m * a;
        CHECK(abs(prod.a - Quaternion(1.0)) < 1e-10);
        CHECK(abs(prod.b) < 1e-10);
        CHECK(abs(prod.c) < 1e-10);
        CHECK(abs(prod.d - Quaternion(1.0)) < 1e-10);
    }
    CHECK_THROWS_AS(two_by_two_inverse(unit_i(), unit_i()), IllConditionedPair);
    CHECK_THROWS_AS(
        two_by_two_inverse(unit_i(), make_unit(1.0, 0.01, 0.0), 0.5),
        IllConditionedPair);
}

TEST_CASE("represent pairs stems with units") {
    const StemValue F{Quaternion(1.0), Quaternion(2.0)};
    CHECK(approx_equal(represent(F, unit_i()), Quaternion{1, 2, 0, 0}, 0.0));
    const StemValue C{Quaternion{3, 1, 0, 2}, Quaternion{}};
    CHECK(approx_equal(represent(C, unit_k()), C.F1, 0.0));
    const StemValue U{Quaternion{}, Quaternion(1.0)};
    CHECK(approx_equal(represent(U, unit_j()), Quaternion{0, 0, 1, 0}, 0.0));
    CHECK(approx_equal(represent(F, std::optional<UnitImaginary>{}), F.F1, 0.0));
}

TEST_CASE("extraction of the identity at 1 + 2i") {
    const Domain ball = wide_ball();
    const PathSliceFn id = make_identity(ball);
    const ComplexPath gamma =
        refine(straight_path_to(SlicePoint::make({1.0}, {2.0}, unit_i())), 0.05);
    const auto eval = [&id](const SlicePoint& q) { return id.eval(q); };

    const StemValue F = extract_stem(eval, ball, gamma, unit_i(), -unit_i());
    CHECK(approx_equal(F.F1, Quaternion(1.0), 1e-12));
    CHECK(approx_equal(F.F2, Quaternion(2.0), 1e-12));

    // constants extract to (c, 0) for any admissible pair
    const Quaternion c{0.3, -1.0, 2.0, 0.7};
    const PathSliceFn cf = make_constant(c, ball);
    const auto ceval = [&cf](const SlicePoint& q) { return cf.eval(q); };
    const StemValue Fc = extract_stem(ceval, ball, gamma, unit_j(), unit_k());
    CHECK(approx_equal(Fc.F1, c, 1e-12));
    CHECK(abs(Fc.F2) < 1e-12);

    // a real endpoint collapses the second component exactly
    const ComplexPath to_real = make_segment({{0.0, 0.0}}, {{0.5, 0.0}});
    const StemValue Fr = extract_stem(eval, ball, to_real, unit_i(), unit_j());
    CHECK(approx_equal(Fr.F1, Quaternion(0.5), 0.0));
    CHECK(abs(Fr.F2) == 0.0);

    CHECK_THROWS_AS(
        extract_stem(eval, unit_ball(), gamma, unit_i(), -unit_i()),
        UnitsNotAdmissible);
}

TEST_CASE("poly_stem oracle frozen values") {
    const std::vector<Quaternion> identity = {Quaternion{}, Quaternion(1.0)};
    const StemValue F1 = poly_stem(identity, {1.0, 2.0});
    CHECK(approx_equal(F1.F1, Quaternion(1.0), 0.0));
    CHECK(approx_equal(F1.F2, Quaternion(2.0), 0.0));

    // q^2 at z = 1 + 2i: z^2 = -3 + 4i
    const std::vector<Quaternion> square = {Quaternion{}, Quaternion{},
                                            Quaternion(1.0)};
    const StemValue F2 = poly_stem(square, {1.0, 2.0});
    CHECK(approx_equal(F2.F1, Quaternion(-3.0), 1e-15));
    CHECK(approx_equal(F2.F2, Quaternion(4.0), 1e-15));

    const Quaternion c{1, 2, 3, 4};
    const StemValue F3 = poly_stem({c}, {0.4, -0.7});
    CHECK(approx_equal(F3.F1, c, 0.0));
    CHECK(abs(F3.F2) == 0.0);
}

TEST_CASE("sub stem agrees with the closed-form polynomial oracle") {
    const Domain ball = unit_ball();
    const auto units = sphere_sample(50, 7);
    std::mt19937_64 rng(21);
    auto u = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-52 - 1.0; };

    for (int t = 0; t < 20; ++t) {
        std::vector<Quaternion> coeffs;
        const int degree = static_cast<int>(rng() % 5);
        for (int k = 0; k <= degree; ++k) coeffs.push_back({u(), u(), u(), u()});
        const PathSliceFn f = make_polynomial(coeffs, ball);

        const SlicePoint q =
            SlicePoint::make({0.4 * u()}, {0.4 * (u() + 1.2)}, make_unit(u() + 2, u(), u()));
        const ComplexPath gamma = refine(straight_path_to(q), 0.05);
        const StemValue got = sub_stem(f, gamma, units);
        const StemValue want = poly_stem(coeffs, endpoint(gamma)[0]);
        CHECK(stem_close(got, want, 1e-9));
    }
}

TEST_CASE("pair choice does not matter on the ball") {
    const Domain ball = wide_ball();
    const std::vector<Quaternion> square = {Quaternion{}, Quaternion{},
                                            Quaternion(1.0)};
    const PathSliceFn f = make_polynomial(square, ball);
    const ComplexPath gamma =
        refine(straight_path_to(SlicePoint::make({1.0}, {2.0}, unit_i())), 0.05);
    const auto eval = [&f](const SlicePoint& q) { return f.eval(q); };

    const StemValue a = extract_stem(eval, ball, gamma, unit_i(), -unit_i());
    const StemValue b = extract_stem(eval, ball, gamma, unit_j(), unit_k());
    CHECK(stem_close(a, b, 1e-9));

    // and the verify flag is quiet when stems agree
    VerifyOptions opts;
    opts.verify_pair_choice = true;
    CHECK_NOTHROW(sub_stem(f, gamma, sphere_sample(20, 3), opts));
}

TEST_CASE("sub stem reproduces a stored stem closure") {
    const Domain ball = unit_ball();
    const std::vector<Quaternion> coeffs = {Quaternion{0.2, 0, 1, 0},
                                            Quaternion(1.0)};
    const auto closure = [coeffs](const ComplexPath& gamma) {
        return poly_stem(coeffs, endpoint(gamma)[0]);
    };
    const PathSliceFn g = PathSliceFn::stem_backed("closure", ball, closure);
    const auto units = sphere_sample(30, 5);
    const ComplexPath gamma =
        refine(straight_path_to(SlicePoint::make({0.3}, {0.5}, unit_k())), 0.05);
    const StemValue via_extraction = sub_stem(g, gamma, units);
    const StemValue direct = closure(gamma);
    CHECK(stem_close(via_extraction, direct, 1e-10));
}

TEST_CASE("too few admissible units is an explicit failure") {
    const ComplexPath base = make_segment({{0.2, 0.0}}, {{1.0, 2.0}});
    const Domain tube = make_slice_tube(base, unit_i(), 0.1);
    const PathSliceFn f("restricted", tube, [](const SlicePoint& q) {
        return q.component(0);
    });
    const auto units = sphere_sample(100, 7);
    CHECK_THROWS_AS(sub_stem(f, refine(base, 0.05), units), InsufficientUnits);
}

TEST_CASE("point stem values") {
    const Domain ball = wide_ball();
    const auto units = sphere_sample(50, 7);
    const PathSliceFn id = make_identity(ball);

    const SlicePoint r = SlicePoint::real({0.7});
    const PointStem at_real = point_stem(id, ball, r, units);
    CHECK(at_real.well_definedness_verified);
    CHECK(approx_equal(at_real.stem.F1, Quaternion(0.7), 0.0));
    CHECK(abs(at_real.stem.F2) == 0.0);

    const SlicePoint q = SlicePoint::make({1.0}, {2.0}, unit_j());
    const PointStem at_q = point_stem(id, ball, q, units);
    CHECK(!at_q.well_definedness_verified);
    CHECK(approx_equal(at_q.stem.F1, Quaternion(1.0), 1e-12));
    CHECK(approx_equal(at_q.stem.F2, Quaternion(2.0), 1e-12));

    CHECK_THROWS(point_stem(id, ball, SlicePoint::real({9.0}), units));
}

TEST_CASE("point stems are path independent on a ball") {
    const Domain ball = unit_ball();
    const auto units = sphere_sample(50, 7);
    const std::vector<Quaternion> square = {Quaternion{}, Quaternion{},
                                            Quaternion(1.0)};
    const PathSliceFn f = make_polynomial(square, ball);

    const SlicePoint q = SlicePoint::make({0.4}, {0.6}, unit_j());
    const ComplexPath straight = refine(straight_path_to(q), 0.05);
    const ComplexPath bent = refine(
        make_polyline({{{-0.3, 0.0}}, {{0.4, 0.0}}, {{0.4, 0.6}}}), 0.05);
    const StemValue a = sub_stem(f, straight, units);
    const StemValue b = sub_stem(f, bent, units);
    CHECK(stem_close(a, b, 1e-9));
}

TEST_CASE("verify_path_slice separates slice material from the rest") {
    const Domain ball = unit_ball();
    const Corpus corpus = build_corpus(ball, {});
    std::vector<ComplexPath> paths(corpus.paths.begin(),
                                   corpus.paths.begin() + 30);
    const auto units = sphere_sample(40, 7);

    const PathSliceFn poly = make_polynomial(
        {Quaternion{0.1, 0.2, -0.3, 0.4}, Quaternion(1.0), Quaternion{0, 0, 1, 0}},
        ball);
    CHECK(verify_path_slice(poly, ball, paths, units, 1e-9).passed());

    const PathSliceFn bad = make_component_x(ball);
    const CheckReport report = verify_path_slice(bad, ball, paths, units, 1e-9);
    CHECK(!report.passed());
    CHECK(report.witnesses.size() > 0);
    CHECK(report.witnesses[0].contains("residual"));

    const auto closure = [](const ComplexPath& gamma) {
        return poly_stem({Quaternion(1.0), Quaternion(0.5)}, endpoint(gamma)[0]);
    };
    const PathSliceFn backed = PathSliceFn::stem_backed("backed", ball, closure);
    CHECK(verify_path_slice(backed, ball, paths, units, 1e-9).passed());
}

TEST_CASE("extraction works in two variables") {
    const Domain ball2 = make_euclidean_ball(std::vector<double>{0.0, 0.0}, 2.0);
    // coordinate extraction q -> q_2 is path-slice with stem (x_2, y_2)
    const PathSliceFn coord("second-coordinate", ball2, [](const SlicePoint& q) {
        return q.component(1);
    });
    const auto units = sphere_sample(40, 7);
    const SlicePoint q =
        SlicePoint::make({0.3, 0.5}, {0.2, 0.7}, make_unit(1.0, -1.0, 0.5));
    const ComplexPath gamma = refine(straight_path_to(q), 0.05);

    const StemValue F = sub_stem(coord, gamma, units);
    CHECK(approx_equal(F.F1, Quaternion(0.5), 1e-12));
    CHECK(approx_equal(F.F2, Quaternion(0.7), 1e-12));

    const CheckReport rpc = check_real_path_connected(ball2, {q}, {});
    CHECK(rpc.passed());

    CHECK(slice_units(ball2, gamma, units).size() == units.size());
}

TEST_CASE("stem symmetries hold for polynomials") {
    const Domain ball = unit_ball();
    const Corpus corpus = build_corpus(ball, {});
    std::vector<ComplexPath> paths(corpus.paths.begin(),
                                   corpus.paths.begin() + 30);
    const auto units = sphere_sample(40, 7);

    const PathSliceFn square = make_polynomial(
        {Quaternion{}, Quaternion{}, Quaternion(1.0)}, ball);
    const CheckReport r1 = check_stem_symmetries(square, ball, paths, units);
    CHECK(r1.passed());
    CHECK(r1.resolution["real_endpoint_paths"].get<std::size_t>() >= 5);

    const PathSliceFn c = make_constant({0.5, 1, 0, -2}, ball);
    CHECK(check_stem_symmetries(c, ball, paths, units).passed());
}
