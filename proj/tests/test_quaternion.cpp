#include "slicestar/quaternion.hpp"

#include <random>

#include "doctest.h"
#include "slicestar/errors.hpp"

using namespace slicestar;

namespace {

Quaternion rand_quat(std::mt19937_64& rng) {
    auto u = [&rng] {
        return static_cast<double>(rng() >> 11) * 0x1.0p-52 - 1.0;
    };
    return {u(), u(), u(), u()};
}

}  // namespace

TEST_CASE("hamilton product defining relations") {
    const Quaternion i{0, 1, 0, 0}, j{0, 0, 1, 0}, k{0, 0, 0, 1};
    CHECK(approx_equal(i * j, k, 0.0));
    CHECK(approx_equal(j * k, i, 0.0));
    CHECK(approx_equal(k * i, j, 0.0));
    CHECK(approx_equal(i * i, Quaternion(-1.0), 0.0));

    const Quaternion one_i{1, 1, 0, 0}, one_j{1, 0, 1, 0};
    CHECK(approx_equal(one_i * one_j, Quaternion{1, 1, 1, 1}, 0.0));
}

TEST_CASE("inverse identities") {
    CHECK(approx_equal(inverse(Quaternion(2.0)), Quaternion(0.5), 0.0));

    const Quaternion q{2, 3, 0, -1};
    CHECK(approx_equal(q * inverse(q), Quaternion(1.0), 1e-12));

    // (i - j)^{-1} = (j - i) / 2
    const Quaternion imj{0, 1, -1, 0};
    CHECK(approx_equal(inverse(imj), Quaternion{0, -0.5, 0.5, 0}, 1e-15));

    CHECK_THROWS_AS(inverse(Quaternion{}), ZeroDivisor);
}

TEST_CASE("conjugation is an involutive anti-homomorphism") {
    const Quaternion i{0, 1, 0, 0}, j{0, 0, 1, 0};
    CHECK(approx_equal(conj(Quaternion{1, 2, 0, 0}), Quaternion{1, -2, 0, 0}, 0.0));
    // conj(ij) = conj(k) = -k equals conj(j) conj(i) = (-j)(-i)
    CHECK(approx_equal(conj(i * j), conj(j) * conj(i), 0.0));

    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
        const Quaternion p = rand_quat(rng), q = rand_quat(rng);
        CHECK(approx_equal(conj(conj(p)), p, 0.0));
        CHECK(approx_equal(conj(p * q), conj(q) * conj(p), 1e-12));
    }
}

TEST_CASE("associativity and multiplicative norm over random samples") {
    std::mt19937_64 rng(7);
    double worst_assoc = 0.0, worst_norm = 0.0;
    for (int t = 0; t < 10000; ++t) {
        const Quaternion p = rand_quat(rng), q = rand_quat(rng), r = rand_quat(rng);
        worst_assoc = std::max(worst_assoc, abs((p * q) * r - p * (q * r)));
        const double lhs = abs(p * q), rhs = abs(p) * abs(q);
        worst_norm =
            std::max(worst_norm, std::fabs(lhs - rhs) / std::max(1e-30, rhs));
    }
    CHECK(worst_assoc < 1e-12);
    CHECK(worst_norm < 1e-12);
}

TEST_CASE("sphere sample: forced base set, determinism, closure") {
    const auto base = sphere_sample(6, 123);
    REQUIRE(base.size() == 6);
    CHECK(distance(base[0], unit_i()) == 0.0);
    CHECK(distance(base[1], -unit_i()) == 0.0);
    CHECK(distance(base[2], unit_j()) == 0.0);
    CHECK(distance(base[5], -unit_k()) == 0.0);

    const auto a = sphere_sample(100, 7);
    const auto b = sphere_sample(100, 7);
    REQUIRE(a.size() == 100);
    REQUIRE(a.size() == b.size());
    for (std::size_t t = 0; t < a.size(); ++t) {
        CHECK(distance(a[t], b[t]) == 0.0);
    }

    for (const UnitImaginary& u : a) {
        const Quaternion sq = u.as_quaternion() * u.as_quaternion();
        CHECK(abs(sq + Quaternion(1.0)) < 1e-12);
        bool has_negation = false;
        for (const UnitImaginary& v : a) {
            if (distance(v, -u) < 1e-12) has_negation = true;
        }
        CHECK(has_negation);
    }

    // different seeds move the lattice
    const auto c = sphere_sample(100, 8);
    bool differs = false;
    for (std::size_t t = 0; t < a.size(); ++t) {
        if (distance(a[t], c[t]) > 1e-9) differs = true;
    }
    CHECK(differs);

    CHECK(sphere_sample(2, 0).size() == 6);
    CHECK(sphere_sample(9, 0).size() == 10);  // rounded up for negation closure
}
