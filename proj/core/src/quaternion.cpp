#include "slicestar/quaternion.hpp"

#include <numbers>
#include <ostream>

#include "slicestar/errors.hpp"

namespace slicestar {

Quaternion inverse(const Quaternion& q, double eps) {
    const double n2 = norm_sq(q);
    if (std::sqrt(n2) < eps) {
        throw ZeroDivisor("quaternion inverse: modulus below epsilon");
    }
    return conj(q) * (1.0 / n2);
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
    return os << '(' << q.w << ',' << q.x << ',' << q.y << ',' << q.z << ')';
}

UnitImaginary make_unit(double x, double y, double z) {
    const double n = std::sqrt(x * x + y * y + z * z);
    if (n < 1e-12) {
        throw ZeroDivisor("make_unit: direction vector too small");
    }
    return {x / n, y / n, z / n};
}

namespace {

std::uint64_t splitmix64(std::uint64_t v) {
    v += 0x9e3779b97f4a7c15ULL;
    v = (v ^ (v >> 30)) * 0xbf58476d1ce4e5b9ULL;
    v = (v ^ (v >> 27)) * 0x94d049bb133111ebULL;
    return v ^ (v >> 31);
}

}  // namespace

std::vector<UnitImaginary> sphere_sample(int count, std::uint64_t seed) {
    std::vector<UnitImaginary> out = {unit_i(), -unit_i(), unit_j(),
                                      -unit_j(), unit_k(), -unit_k()};
    if (count <= 6) {
        return out;
    }

    // Pairs of (lattice point, negation) on top of the canonical six.
    const int extra = ((count - 6) + 1) / 2;
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    const double phase =
        2.0 * std::numbers::pi *
        (static_cast<double>(splitmix64(seed) >> 11) * 0x1.0p-53);

    std::vector<UnitImaginary> lattice;
    lattice.reserve(static_cast<std::size_t>(extra));
    for (int m = 0; m < extra; ++m) {
        const double zc = 1.0 - 2.0 * (m + 0.5) / extra;
        const double r = std::sqrt(1.0 - zc * zc);
        const double theta = golden * m + phase;
        lattice.push_back(make_unit(r * std::cos(theta), r * std::sin(theta), zc));
    }
    for (const UnitImaginary& u : lattice) out.push_back(u);
    for (const UnitImaginary& u : lattice) out.push_back(-u);
    return out;
}

}  // namespace slicestar
