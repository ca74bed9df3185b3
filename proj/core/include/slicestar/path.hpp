#pragma once

#include <cstdint>
#include <vector>

#include "slicestar/slice_space.hpp"

namespace slicestar {

/// Discretized continuous path in C^n with real initial point, stored as a
/// polyline of at least two samples.  Sample k sits at parameter k / (K - 1).
struct ComplexPath {
    std::vector<ComplexPoint> samples;

    std::size_t dim() const { return samples.empty() ? 0 : samples.front().size(); }
};

/// Validating constructor: at least two samples, equal dimensions, first
/// sample real within kRealEps (its imaginary parts are snapped to zero).
ComplexPath make_path(std::vector<ComplexPoint> samples);

/// Straight segment from a real start to an endpoint.
ComplexPath make_segment(const ComplexPoint& from_real, const ComplexPoint& to);

/// Polyline through the given vertices, first vertex real.
ComplexPath make_polyline(const std::vector<ComplexPoint>& vertices);

/// Circular arc in C^1 from a real start around a real center (n = 1 only).
ComplexPath make_arc(double center, double radius, double angle0, double angle1,
                     int segments = 32);

/// Pointwise slice embedding of the samples with unit I.
std::vector<SlicePoint> lift(const ComplexPath& path, const UnitImaginary& unit);

/// Last point of the lift; faster than materializing the whole lift.
SlicePoint lift_end(const ComplexPath& path, const UnitImaginary& unit);

/// Pointwise complex conjugation; still starts in R^n.
ComplexPath conj_path(const ComplexPath& path);

ComplexPoint endpoint(const ComplexPath& path);

/// Path t -> x + t y i whose lift at the point's canonical unit ends exactly
/// at q; for real q, the constant path at x.
ComplexPath straight_path_to(const SlicePoint& q);

/// Linear subdivision until consecutive samples are within max_step; original
/// samples are kept bit-for-bit, so the operation is idempotent.
ComplexPath refine(const ComplexPath& path, double max_step);

double euclid_distance(const ComplexPoint& a, const ComplexPoint& b);

/// FNV-1a over the raw sample bytes; identity key for stem caches.
std::uint64_t content_hash(const ComplexPath& path);

}  // namespace slicestar
