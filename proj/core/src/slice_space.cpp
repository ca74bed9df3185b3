#include "slicestar/slice_space.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace slicestar {

namespace {

// Index of the first y component at or above the real threshold.
std::ptrdiff_t pivot_index(const std::vector<double>& y) {
    for (std::size_t l = 0; l < y.size(); ++l) {
        if (std::fabs(y[l]) >= kRealEps) return static_cast<std::ptrdiff_t>(l);
    }
    return -1;
}

}  // namespace

SlicePoint SlicePoint::real(std::vector<double> x) {
    SlicePoint p;
    p.x_ = std::move(x);
    p.y_.assign(p.x_.size(), 0.0);
    return p;
}

SlicePoint SlicePoint::make(std::vector<double> x, std::vector<double> y,
                            const UnitImaginary& unit) {
    if (x.size() != y.size()) {
        throw std::invalid_argument("SlicePoint: x and y must have equal length");
    }
    const std::ptrdiff_t pivot = pivot_index(y);
    if (pivot < 0) {
        return real(std::move(x));
    }
    SlicePoint p;
    p.x_ = std::move(x);
    p.y_ = std::move(y);
    UnitImaginary u = unit;
    if (p.y_[static_cast<std::size_t>(pivot)] < 0.0) {
        for (double& v : p.y_) v = -v;
        u = -u;
    }
    for (double& v : p.y_) {
        if (std::fabs(v) < kRealEps) v = 0.0;
    }
    p.unit_ = u;
    return p;
}

Quaternion SlicePoint::component(std::size_t l) const {
    Quaternion q(x_[l]);
    if (unit_) {
        q.x = y_[l] * unit_->x;
        q.y = y_[l] * unit_->y;
        q.z = y_[l] * unit_->z;
    }
    return q;
}

SlicePoint embed(const ComplexPoint& z, const UnitImaginary& unit) {
    std::vector<double> x(z.size()), y(z.size());
    for (std::size_t l = 0; l < z.size(); ++l) {
        x[l] = z[l].real();
        y[l] = z[l].imag();
    }
    return SlicePoint::make(std::move(x), std::move(y), unit);
}

std::optional<UnitImaginary> canonical_unit(const SlicePoint& q) {
    return q.unit();
}

SlicePoint conj_point(const SlicePoint& q) {
    if (q.is_real()) return q;
    return SlicePoint::make(q.x(), q.y(), -*q.unit());
}

bool near_real(const SlicePoint& q) {
    if (q.is_real()) return false;
    for (double v : q.y()) {
        if (std::fabs(v) >= kNearRealEps) return false;
    }
    return true;
}

double distance(const SlicePoint& a, const SlicePoint& b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("SlicePoint distance: dimension mismatch");
    }
    // componentwise |q_l - p_l| in H, with the imaginary parts differenced as
    // 3-vectors (no cancellation for coincident points)
    const UnitImaginary ua = a.unit().value_or(UnitImaginary{});
    const UnitImaginary ub = b.unit().value_or(UnitImaginary{});
    double d2 = 0.0;
    for (std::size_t l = 0; l < a.dim(); ++l) {
        const double dx = a.x()[l] - b.x()[l];
        const double ya = a.y()[l], yb = b.y()[l];
        const double vx = ya * ua.x - yb * ub.x;
        const double vy = ya * ua.y - yb * ub.y;
        const double vz = ya * ua.z - yb * ub.z;
        d2 += dx * dx + vx * vx + vy * vy + vz * vz;
    }
    return std::sqrt(d2);
}

bool approx_equal(const SlicePoint& a, const SlicePoint& b, double tol) {
    return a.dim() == b.dim() && distance(a, b) <= tol;
}

ComplexPoint plane_coordinates(const SlicePoint& q) {
    ComplexPoint z(q.dim());
    for (std::size_t l = 0; l < q.dim(); ++l) {
        z[l] = {q.x()[l], q.y()[l]};
    }
    return z;
}

std::vector<double> to_r4(const SlicePoint& q) {
    std::vector<double> v;
    v.reserve(4 * q.dim());
    for (std::size_t l = 0; l < q.dim(); ++l) {
        const Quaternion c = q.component(l);
        v.push_back(c.w);
        v.push_back(c.x);
        v.push_back(c.y);
        v.push_back(c.z);
    }
    return v;
}

}  // namespace slicestar
