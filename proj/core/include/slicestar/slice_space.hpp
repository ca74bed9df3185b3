#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "slicestar/quaternion.hpp"

namespace slicestar {

/// Point of C^n, the common parameter space of all slices.
using ComplexPoint = std::vector<std::complex<double>>;

/// Components with |imaginary part| below this threshold count as real.
inline constexpr double kRealEps = 1e-12;

/// Points with 0 < max|y_l| < kNearRealEps are flagged in reports: the
/// canonical unit is numerically discontinuous there.
inline constexpr double kNearRealEps = 1e-8;

/// Point of the weakly slice cone in canonical coordinates: component l is
/// x_l + y_l I.  Canonical form means the first component with |y_l| >=
/// kRealEps has y_l > 0 (sub-threshold y components are zeroed), and real
/// points carry no unit.  The stored unit therefore coincides with the
/// canonical imaginary-unit assignment.
class SlicePoint {
public:
    SlicePoint() = default;

    /// Real point (y = 0, no unit).
    static SlicePoint real(std::vector<double> x);

    /// Canonicalizes (x, y, I); flips to (-y, -I) when the leading
    /// significant y component is negative.
    static SlicePoint make(std::vector<double> x, std::vector<double> y,
                           const UnitImaginary& unit);

    std::size_t dim() const { return x_.size(); }
    const std::vector<double>& x() const { return x_; }
    const std::vector<double>& y() const { return y_; }
    const std::optional<UnitImaginary>& unit() const { return unit_; }

    bool is_real() const { return !unit_.has_value(); }
    /// Component l as a quaternion x_l + y_l I.
    Quaternion component(std::size_t l) const;

private:
    std::vector<double> x_;
    std::vector<double> y_;
    std::optional<UnitImaginary> unit_;
};

/// The slice embedding: x + yi in C^n maps to x + yI.
SlicePoint embed(const ComplexPoint& z, const UnitImaginary& unit);

/// Canonical imaginary unit of a point: nothing for real points, otherwise
/// the normalized imaginary direction of the first non-real component.  For
/// canonical SlicePoints this is the stored unit.
std::optional<UnitImaginary> canonical_unit(const SlicePoint& q);

/// Componentwise quaternionic conjugate x - yI, re-canonicalized.
SlicePoint conj_point(const SlicePoint& q);

/// True when the point is not real but lies within kNearRealEps of the real
/// locus in every component.
bool near_real(const SlicePoint& q);

/// Euclidean distance in H^n between two slice points.
double distance(const SlicePoint& a, const SlicePoint& b);

bool approx_equal(const SlicePoint& a, const SlicePoint& b, double tol = 1e-9);

/// Plane coordinates of q inside its own slice; real points give y = 0.
ComplexPoint plane_coordinates(const SlicePoint& q);

/// Flattens to (w, x, y, z) per component, 4n reals.
std::vector<double> to_r4(const SlicePoint& q);

}  // namespace slicestar
