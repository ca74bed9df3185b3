#pragma once

#include <vector>

#include "slicestar/star.hpp"
#include "slicestar/stem.hpp"

namespace slicestar {

struct CRRow {
    UnitImaginary unit;
    std::vector<double> x;
    std::vector<double> y;  // signed plane coordinate
    std::size_t var = 0;
    double residual = 0.0;
};

/// Central-difference residuals of (1/2)(d/dx_l + I d/dy_l) per slice unit,
/// grid point and variable; grid points whose stencil leaves the domain are
/// skipped and counted.
struct CRReport {
    double max_residual = 0.0;
    double max_residual_half = std::numeric_limits<double>::quiet_NaN();
    /// log2(max_residual / max_residual_half); finite only when both steps
    /// produced data above the rounding floor.
    double order_estimate = std::numeric_limits<double>::quiet_NaN();
    std::size_t evaluated = 0;
    std::size_t skipped = 0;
    std::vector<CRRow> rows;
};

/// Residuals on an explicit plane grid within one slice.
std::vector<CRRow> cr_residual_slice(const PathSliceFn& f, const Domain& domain,
                                     const UnitImaginary& unit,
                                     const std::vector<ComplexPoint>& grid,
                                     double h, std::size_t* skipped = nullptr);

/// Aggregate over sampled units on a uniform grid inside the domain bounds;
/// runs a second pass at h/2 on the same points for the order estimate.
CRReport cr_residual(const PathSliceFn& f, const Domain& domain,
                     const std::vector<UnitImaginary>& units,
                     int grid_per_axis = 17, double h = 1e-3,
                     bool with_half_step = true);

/// Builds f * g under the given hypothesis and checks that its residual stays
/// below tol with second-order decay (or at the rounding floor).
CheckReport verify_regular_closed_under_star(
    const PathSliceFn& f, const PathSliceFn& g, const Domain& omega,
    const std::vector<UnitImaginary>& units, int grid_per_axis, double h,
    double tol, const StarHypothesis& hypothesis, const VerifyOptions& opts = {});

}  // namespace slicestar
