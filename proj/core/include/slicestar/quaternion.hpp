#pragma once

#include <cmath>
#include <cstdint>
#include <iosfwd>
#include <vector>

namespace slicestar {

/// Element of the quaternion algebra, components of 1, i, j, k.
struct Quaternion {
    double w = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double w_, double x_, double y_, double z_)
        : w(w_), x(x_), y(y_), z(z_) {}
    constexpr explicit Quaternion(double real) : w(real) {}

    Quaternion& operator+=(const Quaternion& r) {
        w += r.w;
        x += r.x;
        y += r.y;
        z += r.z;
        return *this;
    }
    Quaternion& operator-=(const Quaternion& r) {
        w -= r.w;
        x -= r.x;
        y -= r.y;
        z -= r.z;
        return *this;
    }
    Quaternion& operator*=(double s) {
        w *= s;
        x *= s;
        y *= s;
        z *= s;
        return *this;
    }
};

inline Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
inline Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
inline Quaternion operator-(const Quaternion& q) { return {-q.w, -q.x, -q.y, -q.z}; }
inline Quaternion operator*(Quaternion q, double s) { return q *= s; }
inline Quaternion operator*(double s, Quaternion q) { return q *= s; }

/// Hamilton product; not commutative.
inline Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

inline Quaternion conj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }

inline double norm_sq(const Quaternion& q) {
    return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
}

inline double abs(const Quaternion& q) { return std::sqrt(norm_sq(q)); }

/// q^{-1} = conj(q) / |q|^2.  Throws ZeroDivisor when |q| < eps.
Quaternion inverse(const Quaternion& q, double eps = 1e-12);

inline bool approx_equal(const Quaternion& a, const Quaternion& b, double tol = 1e-9) {
    return abs(a - b) <= tol;
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

/// Purely imaginary quaternion of unit modulus, so I^2 = -1.
struct UnitImaginary {
    double x = 1.0;
    double y = 0.0;
    double z = 0.0;

    Quaternion as_quaternion() const { return {0.0, x, y, z}; }
    UnitImaginary operator-() const { return {-x, -y, -z}; }
};

inline UnitImaginary unit_i() { return {1.0, 0.0, 0.0}; }
inline UnitImaginary unit_j() { return {0.0, 1.0, 0.0}; }
inline UnitImaginary unit_k() { return {0.0, 0.0, 1.0}; }

inline double dot(const UnitImaginary& a, const UnitImaginary& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

/// Euclidean distance |I - J| between two imaginary units.
inline double distance(const UnitImaginary& a, const UnitImaginary& b) {
    const double dx = a.x - b.x, dy = a.y - b.y, dz = a.z - b.z;
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

inline bool approx_equal(const UnitImaginary& a, const UnitImaginary& b, double tol = 1e-9) {
    return distance(a, b) <= tol;
}

/// Normalizes (x, y, z) to a unit imaginary.  Throws ZeroDivisor on a
/// near-zero vector.
UnitImaginary make_unit(double x, double y, double z);

/// Deterministic quasi-uniform sample of the imaginary unit sphere.
///
/// The result always starts with the six canonical units +-i, +-j, +-k and is
/// closed under negation: extra directions come from a Fibonacci lattice whose
/// phase is derived from the seed, each followed later by its negation.  The
/// size is max(count, 6), rounded up so the negation closure stays exact.
std::vector<UnitImaginary> sphere_sample(int count, std::uint64_t seed);

}  // namespace slicestar
