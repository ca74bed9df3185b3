#include "slicestar/slice_space.hpp"

#include <random>

#include "doctest.h"

using namespace slicestar;

TEST_CASE("embed canonicalizes the (y, I) ambiguity") {
    const SlicePoint p = embed({{1.0, 2.0}}, unit_j());
    REQUIRE(!p.is_real());
    CHECK(p.x()[0] == 1.0);
    CHECK(p.y()[0] == 2.0);
    CHECK(distance(*p.unit(), unit_j()) == 0.0);

    // negative imaginary part flips to the opposite unit, same point
    const SlicePoint m = embed({{1.0, -2.0}}, unit_j());
    CHECK(m.y()[0] == 2.0);
    CHECK(distance(*m.unit(), -unit_j()) == 0.0);

    const SlicePoint r = embed({{3.0, 0.0}}, unit_k());
    CHECK(r.is_real());
    CHECK(!r.unit().has_value());
}

TEST_CASE("canonical unit assignment") {
    CHECK(!canonical_unit(SlicePoint::real({3.0, 0.0})).has_value());

    // q = (5, 2 + 4j): first non-real component points along j
    const SlicePoint q = SlicePoint::make({5.0, 2.0}, {0.0, 4.0}, unit_j());
    REQUIRE(canonical_unit(q).has_value());
    CHECK(distance(*canonical_unit(q), unit_j()) == 0.0);

    // conjugation flips the canonical unit of any non-real point
    std::mt19937_64 rng(3);
    for (int t = 0; t < 100; ++t) {
        auto u = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-52 - 1.0; };
        const SlicePoint p =
            SlicePoint::make({u(), u()}, {u(), 0.5 + 0.4 * u()},
                             make_unit(u() + 2.0, u(), u()));
        if (p.is_real()) continue;
        const SlicePoint pc = conj_point(p);
        CHECK(distance(*canonical_unit(pc), -*canonical_unit(p)) < 1e-15);
        CHECK(approx_equal(conj_point(pc), p, 1e-15));
    }
}

TEST_CASE("conjugation fixes real points") {
    const SlicePoint r = SlicePoint::real({1.5, -2.0});
    CHECK(approx_equal(conj_point(r), r, 0.0));
}

TEST_CASE("the two raw representatives agree structurally") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 200; ++t) {
        auto u = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-52 - 1.0; };
        const ComplexPoint z = {{u(), u()}, {u(), u()}};
        const UnitImaginary I = make_unit(u() + 1.5, u(), u());
        ComplexPoint zc(z.size());
        for (std::size_t l = 0; l < z.size(); ++l) zc[l] = std::conj(z[l]);
        const SlicePoint a = embed(z, I);
        const SlicePoint b = embed(zc, -I);
        CHECK(a.is_real() == b.is_real());
        CHECK(distance(a, b) == 0.0);
        for (std::size_t l = 0; l < z.size(); ++l) {
            CHECK(a.x()[l] == b.x()[l]);
            CHECK(a.y()[l] == b.y()[l]);
        }
    }
}

TEST_CASE("unit of a canonical point squares to -1") {
    const SlicePoint p = SlicePoint::make({0.2}, {0.7}, make_unit(1.0, 2.0, -0.5));
    const Quaternion sq = p.unit()->as_quaternion() * p.unit()->as_quaternion();
    CHECK(abs(sq + Quaternion(1.0)) < 1e-12);
}

TEST_CASE("near real flagging") {
    CHECK(!near_real(SlicePoint::real({1.0})));
    CHECK(near_real(SlicePoint::make({1.0}, {1e-10}, unit_i())));
    CHECK(!near_real(SlicePoint::make({1.0}, {1e-6}, unit_i())));
}

TEST_CASE("distance matches the quaternion metric") {
    const SlicePoint a = SlicePoint::make({0.0}, {1.0}, unit_i());
    const SlicePoint b = SlicePoint::make({0.0}, {1.0}, unit_k());
    CHECK(distance(a, b) == doctest::Approx(std::sqrt(2.0)));  // |i - k|
    const SlicePoint r = SlicePoint::real({1.0});
    CHECK(distance(r, a) == doctest::Approx(std::sqrt(2.0)));  // |1 - i|
}
