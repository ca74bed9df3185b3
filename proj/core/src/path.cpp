#include "slicestar/path.hpp"

#include <cmath>
#include <cstring>
#include <stdexcept>

namespace slicestar {

ComplexPath make_path(std::vector<ComplexPoint> samples) {
    if (samples.size() < 2) {
        throw std::invalid_argument("path needs at least two samples");
    }
    const std::size_t n = samples.front().size();
    if (n == 0) {
        throw std::invalid_argument("path dimension must be positive");
    }
    for (const ComplexPoint& s : samples) {
        if (s.size() != n) {
            throw std::invalid_argument("path samples have mixed dimensions");
        }
    }
    for (std::complex<double>& c : samples.front()) {
        if (std::fabs(c.imag()) >= kRealEps) {
            throw std::invalid_argument("path must start in R^n");
        }
        c = {c.real(), 0.0};
    }
    return ComplexPath{std::move(samples)};
}

ComplexPath make_segment(const ComplexPoint& from_real, const ComplexPoint& to) {
    return make_path({from_real, to});
}

ComplexPath make_polyline(const std::vector<ComplexPoint>& vertices) {
    return make_path(vertices);
}

ComplexPath make_arc(double center, double radius, double angle0, double angle1,
                     int segments) {
    if (segments < 1) {
        throw std::invalid_argument("arc needs at least one segment");
    }
    std::vector<ComplexPoint> samples;
    samples.reserve(static_cast<std::size_t>(segments) + 1);
    for (int k = 0; k <= segments; ++k) {
        const double t = angle0 + (angle1 - angle0) * k / segments;
        samples.push_back({{center + radius * std::cos(t), radius * std::sin(t)}});
    }
    // The start must be real: callers pick angle0 = 0 or pi.
    return make_path(std::move(samples));
}

std::vector<SlicePoint> lift(const ComplexPath& path, const UnitImaginary& unit) {
    std::vector<SlicePoint> out;
    out.reserve(path.samples.size());
    for (const ComplexPoint& z : path.samples) {
        out.push_back(embed(z, unit));
    }
    return out;
}

SlicePoint lift_end(const ComplexPath& path, const UnitImaginary& unit) {
    return embed(path.samples.back(), unit);
}

ComplexPath conj_path(const ComplexPath& path) {
    ComplexPath out;
    out.samples.reserve(path.samples.size());
    for (const ComplexPoint& z : path.samples) {
        ComplexPoint c(z.size());
        for (std::size_t l = 0; l < z.size(); ++l) c[l] = std::conj(z[l]);
        out.samples.push_back(std::move(c));
    }
    return out;
}

ComplexPoint endpoint(const ComplexPath& path) { return path.samples.back(); }

ComplexPath straight_path_to(const SlicePoint& q) {
    ComplexPoint start(q.dim()), end(q.dim());
    for (std::size_t l = 0; l < q.dim(); ++l) {
        start[l] = {q.x()[l], 0.0};
        end[l] = {q.x()[l], q.y()[l]};
    }
    return ComplexPath{{std::move(start), std::move(end)}};
}

double euclid_distance(const ComplexPoint& a, const ComplexPoint& b) {
    double d2 = 0.0;
    for (std::size_t l = 0; l < a.size(); ++l) {
        const std::complex<double> d = a[l] - b[l];
        d2 += std::norm(d);
    }
    return std::sqrt(d2);
}

ComplexPath refine(const ComplexPath& path, double max_step) {
    if (max_step <= 0.0) {
        throw std::invalid_argument("refine: max_step must be positive");
    }
    ComplexPath out;
    out.samples.reserve(path.samples.size());
    out.samples.push_back(path.samples.front());
    for (std::size_t k = 1; k < path.samples.size(); ++k) {
        const ComplexPoint& a = path.samples[k - 1];
        const ComplexPoint& b = path.samples[k];
        const double len = euclid_distance(a, b);
        if (len > max_step) {
            const int pieces = static_cast<int>(std::ceil(len / max_step));
            for (int t = 1; t < pieces; ++t) {
                ComplexPoint mid(a.size());
                const double s = static_cast<double>(t) / pieces;
                for (std::size_t l = 0; l < a.size(); ++l) {
                    mid[l] = a[l] + s * (b[l] - a[l]);
                }
                out.samples.push_back(std::move(mid));
            }
        }
        out.samples.push_back(b);
    }
    return out;
}

std::uint64_t content_hash(const ComplexPath& path) {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](double v) {
        std::uint64_t bits;
        std::memcpy(&bits, &v, sizeof(bits));
        for (int i = 0; i < 8; ++i) {
            h ^= (bits >> (8 * i)) & 0xffULL;
            h *= 1099511628211ULL;
        }
    };
    mix(static_cast<double>(path.dim()));
    for (const ComplexPoint& z : path.samples) {
        for (const std::complex<double>& c : z) {
            mix(c.real());
            mix(c.imag());
        }
    }
    return h;
}

}  // namespace slicestar
