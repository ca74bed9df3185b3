#include "slicestar/reg_check.hpp"

#include <cmath>

#include "slicestar/json_io.hpp"

namespace slicestar {

namespace {

// Residuals below this are central-difference rounding noise; order
// estimates computed from them are meaningless.
constexpr double kRoundingFloor = 1e-10;

bool stencil_inside(const Domain& domain, const UnitImaginary& unit,
                    const ComplexPoint& z, std::size_t l, double h) {
    for (const double d : {-h, h}) {
        ComplexPoint zx = z, zy = z;
        zx[l] += std::complex<double>{d, 0.0};
        zy[l] += std::complex<double>{0.0, d};
        if (!domain.contains(embed(zx, unit)) || !domain.contains(embed(zy, unit))) {
            return false;
        }
    }
    return true;
}

double residual_at(const PathSliceFn& f, const UnitImaginary& unit,
                   const ComplexPoint& z, std::size_t l, double h) {
    ComplexPoint xp = z, xm = z, yp = z, ym = z;
    xp[l] += std::complex<double>{h, 0.0};
    xm[l] -= std::complex<double>{h, 0.0};
    yp[l] += std::complex<double>{0.0, h};
    ym[l] -= std::complex<double>{0.0, h};
    const Quaternion dx =
        (f.eval(embed(xp, unit)) - f.eval(embed(xm, unit))) * (0.5 / h);
    const Quaternion dy =
        (f.eval(embed(yp, unit)) - f.eval(embed(ym, unit))) * (0.5 / h);
    return 0.5 * abs(dx + unit.as_quaternion() * dy);
}

}  // namespace

std::vector<CRRow> cr_residual_slice(const PathSliceFn& f, const Domain& domain,
                                     const UnitImaginary& unit,
                                     const std::vector<ComplexPoint>& grid,
                                     double h, std::size_t* skipped) {
    std::vector<CRRow> rows;
    for (const ComplexPoint& z : grid) {
        if (!domain.contains(embed(z, unit))) {
            if (skipped) ++*skipped;
            continue;
        }
        for (std::size_t l = 0; l < z.size(); ++l) {
            if (!stencil_inside(domain, unit, z, l, h)) {
                if (skipped) ++*skipped;
                continue;
            }
            CRRow row;
            row.unit = unit;
            row.x.resize(z.size());
            row.y.resize(z.size());
            for (std::size_t m = 0; m < z.size(); ++m) {
                row.x[m] = z[m].real();
                row.y[m] = z[m].imag();
            }
            row.var = l;
            row.residual = residual_at(f, unit, z, l, h);
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

namespace {

// Uniform plane grid: for n = 1 the full (x, y) product; for n >= 2 each
// variable sweeps its plane with the others parked at the box center.
std::vector<ComplexPoint> slice_grid(const Domain& domain, int per_axis, double h) {
    const PlaneBox& box = domain.bounds();
    const std::size_t n = domain.dim();
    std::vector<ComplexPoint> grid;
    ComplexPoint base(n);
    for (std::size_t l = 0; l < n; ++l) {
        base[l] = {0.5 * (box.x_lo[l] + box.x_hi[l]), 0.0};
    }
    const double margin = 2.0 * h;
    for (std::size_t l = 0; l < n; ++l) {
        const double xlo = box.x_lo[l] + margin, xhi = box.x_hi[l] - margin;
        const double ylo = -box.y_abs[l] + margin, yhi = box.y_abs[l] - margin;
        for (int ix = 0; ix < per_axis; ++ix) {
            for (int iy = 0; iy < per_axis; ++iy) {
                ComplexPoint z = base;
                z[l] = {xlo + (xhi - xlo) * ix / (per_axis - 1),
                        ylo + (yhi - ylo) * iy / (per_axis - 1)};
                grid.push_back(std::move(z));
            }
        }
    }
    return grid;
}

}  // namespace

CRReport cr_residual(const PathSliceFn& f, const Domain& domain,
                     const std::vector<UnitImaginary>& units, int grid_per_axis,
                     double h, bool with_half_step) {
    CRReport report;
    const std::vector<ComplexPoint> grid = slice_grid(domain, grid_per_axis, h);
    for (const UnitImaginary& unit : units) {
        for (const ComplexPoint& z : grid) {
            if (!domain.contains(embed(z, unit))) {
                ++report.skipped;
                continue;
            }
            for (std::size_t l = 0; l < z.size(); ++l) {
                if (!stencil_inside(domain, unit, z, l, h) ||
                    (with_half_step &&
                     !stencil_inside(domain, unit, z, l, h / 2.0))) {
                    ++report.skipped;
                    continue;
                }
                CRRow row;
                row.unit = unit;
                row.x.resize(z.size());
                row.y.resize(z.size());
                for (std::size_t m = 0; m < z.size(); ++m) {
                    row.x[m] = z[m].real();
                    row.y[m] = z[m].imag();
                }
                row.var = l;
                row.residual = residual_at(f, unit, z, l, h);
                report.max_residual = std::max(report.max_residual, row.residual);
                report.rows.push_back(std::move(row));
                ++report.evaluated;
                if (with_half_step) {
                    const double half = residual_at(f, unit, z, l, h / 2.0);
                    if (std::isnan(report.max_residual_half)) {
                        report.max_residual_half = half;
                    } else {
                        report.max_residual_half =
                            std::max(report.max_residual_half, half);
                    }
                }
            }
        }
    }
    if (with_half_step && report.evaluated > 0 &&
        report.max_residual > kRoundingFloor &&
        report.max_residual_half > kRoundingFloor) {
        report.order_estimate =
            std::log2(report.max_residual / report.max_residual_half);
    }
    return report;
}

CheckReport verify_regular_closed_under_star(
    const PathSliceFn& f, const PathSliceFn& g, const Domain& omega,
    const std::vector<UnitImaginary>& units, int grid_per_axis, double h,
    double tol, const StarHypothesis& hypothesis, const VerifyOptions& opts) {
    const PathSliceFn product = fn_star(f, g, omega, omega, hypothesis, units, opts);
    const CRReport cr = cr_residual(product, omega, units, grid_per_axis, h, true);

    CheckReport report;
    const bool residual_ok = cr.max_residual <= tol;
    const bool order_ok = cr.max_residual_half <= kRoundingFloor ||
                          (std::isfinite(cr.order_estimate) &&
                           cr.order_estimate >= 1.8);
    if (!residual_ok || !order_ok) {
        json w;
        w["kind"] = "cr-residual";
        w["function"] = product.name();
        w["max_residual"] = cr.max_residual;
        w["max_residual_half"] = cr.max_residual_half;
        w["order_estimate"] = cr.order_estimate;
        report.add_witness(std::move(w));
    }
    report.resolution["check"] = "regular-closed-under-star";
    report.resolution["h"] = h;
    report.resolution["grid_per_axis"] = grid_per_axis;
    report.resolution["units"] = units.size();
    report.resolution["tol"] = tol;
    report.resolution["max_residual"] = cr.max_residual;
    report.resolution["max_residual_half"] = cr.max_residual_half;
    report.resolution["order_estimate"] = cr.order_estimate;
    report.resolution["evaluated"] = cr.evaluated;
    report.resolution["skipped"] = cr.skipped;
    return report;
}

}  // namespace slicestar
