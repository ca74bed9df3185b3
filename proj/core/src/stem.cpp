#include "slicestar/stem.hpp"

#include <cmath>

#include "slicestar/errors.hpp"
#include "slicestar/json_io.hpp"

namespace slicestar {

Mat2Q operator*(const Mat2Q& m, const Mat2Q& n) {
    return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
            m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
}

StemValue apply(const Mat2Q& m, const Quaternion& v1, const Quaternion& v2) {
    return {m.a * v1 + m.b * v2, m.c * v1 + m.d * v2};
}

Mat2Q two_by_two_inverse(const UnitImaginary& I, const UnitImaginary& J,
                         double delta_min) {
    if (distance(I, J) < delta_min) {
        throw IllConditionedPair("unit pair closer than delta_min");
    }
    const Quaternion qI = I.as_quaternion();
    const Quaternion qJ = J.as_quaternion();
    const Quaternion d = inverse(qI - qJ);
    return {d * qI, d * (-qJ), d, -d};
}

Quaternion represent(const StemValue& F, const UnitImaginary& unit) {
    return F.F1 + unit.as_quaternion() * F.F2;
}

Quaternion represent(const StemValue& F, const std::optional<UnitImaginary>& unit) {
    return unit ? represent(F, *unit) : F.F1;
}

PathSliceFn::PathSliceFn(std::string name, Domain domain, Eval eval)
    : name_(std::move(name)), domain_(std::move(domain)), eval_(std::move(eval)) {}

PathSliceFn PathSliceFn::stem_backed(std::string name, Domain domain, Stem stem,
                                     const VerifyOptions& opts) {
    PathSliceFn fn;
    fn.name_ = std::move(name);
    fn.domain_ = std::move(domain);
    fn.stem_ = std::move(stem);
    const Domain dom = fn.domain_;
    const auto stem_fn = fn.stem_;
    fn.eval_ = [dom, stem_fn, opts](const SlicePoint& q) {
        if (q.is_real()) {
            const ComplexPoint at = plane_coordinates(q);
            return stem_fn(ComplexPath{{at, at}}).F1;
        }
        const PathfinderOptions pf{opts.grid_h, opts.max_step};
        auto path = find_real_path(dom, q, pf);
        if (!path) {
            throw NoPathFound("stem-backed eval: no admissible path to point");
        }
        return represent(stem_fn(*path), *q.unit());
    };
    return fn;
}

PathSliceFn with_coefficients(PathSliceFn fn, std::vector<Quaternion> c) {
    fn.coeffs_ = std::move(c);
    return fn;
}

PathSliceFn with_stem(PathSliceFn fn, PathSliceFn::Stem stem) {
    fn.stem_ = std::move(stem);
    return fn;
}

Quaternion poly_eval(const std::vector<Quaternion>& coeffs, const Quaternion& q) {
    Quaternion result{};
    Quaternion power(1.0);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        result += power * coeffs[k];
        if (k + 1 < coeffs.size()) power = power * q;
    }
    return result;
}

PathSliceFn make_polynomial(std::vector<Quaternion> coeffs, Domain domain,
                            std::string name) {
    if (domain.dim() != 1) {
        throw std::invalid_argument("polynomial functions are n = 1 only");
    }
    auto c = coeffs;
    PathSliceFn fn(std::move(name), std::move(domain),
                   [c](const SlicePoint& q) { return poly_eval(c, q.component(0)); });
    return with_coefficients(std::move(fn), std::move(coeffs));
}

PathSliceFn make_constant(const Quaternion& c, Domain domain) {
    if (domain.dim() == 1) {
        return make_polynomial({c}, std::move(domain), "const");
    }
    return PathSliceFn("const", std::move(domain),
                       [c](const SlicePoint&) { return c; });
}

PathSliceFn make_identity(Domain domain) {
    return make_polynomial({Quaternion{}, Quaternion(1.0)}, std::move(domain),
                           "identity");
}

PathSliceFn make_component_x(Domain domain) {
    return PathSliceFn("component-x", std::move(domain),
                       [](const SlicePoint& q) {
                           return Quaternion(q.component(0).x);
                       });
}

PathSliceFn make_conj_identity(Domain domain) {
    return PathSliceFn("conj-identity", std::move(domain),
                       [](const SlicePoint& q) { return conj(q.component(0)); });
}

PathSliceFn make_exp_series(Domain domain, int terms) {
    std::vector<Quaternion> coeffs;
    double factorial = 1.0;
    for (int k = 0; k <= terms; ++k) {
        if (k > 0) factorial *= k;
        coeffs.emplace_back(1.0 / factorial);
    }
    return make_polynomial(std::move(coeffs), std::move(domain), "exp-series");
}

PathSliceFn add(const PathSliceFn& f, const PathSliceFn& g) {
    PathSliceFn out(f.name() + "+" + g.name(), f.domain(),
                    [f, g](const SlicePoint& q) { return f.eval(q) + g.eval(q); });
    if (f.coefficients() && g.coefficients()) {
        std::vector<Quaternion> c = *f.coefficients();
        const std::vector<Quaternion>& d = *g.coefficients();
        if (d.size() > c.size()) c.resize(d.size());
        for (std::size_t k = 0; k < d.size(); ++k) c[k] += d[k];
        out = with_coefficients(std::move(out), std::move(c));
    }
    if (f.has_stem() && g.has_stem()) {
        out = with_stem(std::move(out), [f, g](const ComplexPath& gamma) {
            return f.stem(gamma) + g.stem(gamma);
        });
    }
    return out;
}

PathSliceFn scale(double lambda, const PathSliceFn& f) {
    PathSliceFn out("scaled " + f.name(), f.domain(),
                    [lambda, f](const SlicePoint& q) { return lambda * f.eval(q); });
    if (f.coefficients()) {
        std::vector<Quaternion> c = *f.coefficients();
        for (Quaternion& q : c) q *= lambda;
        out = with_coefficients(std::move(out), std::move(c));
    }
    if (f.has_stem()) {
        out = with_stem(std::move(out), [lambda, f](const ComplexPath& gamma) {
            return lambda * f.stem(gamma);
        });
    }
    return out;
}

StemValue extract_stem(const PathSliceFn::Eval& eval, const Domain& omega2,
                       const ComplexPath& gamma, const UnitImaginary& I,
                       const UnitImaginary& J, double delta_min) {
    if (slice_units(omega2, gamma, {I, J}).size() != 2) {
        throw UnitsNotAdmissible("extract_stem: a lift leaves the domain");
    }
    const Mat2Q inv = two_by_two_inverse(I, J, delta_min);
    return apply(inv, eval(lift_end(gamma, I)), eval(lift_end(gamma, J)));
}

namespace {

// Antipodal pair when available (conditioning 1/2 is optimal), otherwise the
// farthest admissible pair; ties resolved by input order.
std::pair<UnitImaginary, UnitImaginary> best_pair(
    const std::vector<UnitImaginary>& admissible) {
    for (std::size_t i = 0; i < admissible.size(); ++i) {
        for (std::size_t j = i + 1; j < admissible.size(); ++j) {
            if (distance(admissible[i], -admissible[j]) < 1e-12) {
                return {admissible[i], admissible[j]};
            }
        }
    }
    std::size_t bi = 0, bj = 1;
    double best = -1.0;
    for (std::size_t i = 0; i < admissible.size(); ++i) {
        for (std::size_t j = i + 1; j < admissible.size(); ++j) {
            const double d = distance(admissible[i], admissible[j]);
            if (d > best) {
                best = d;
                bi = i;
                bj = j;
            }
        }
    }
    return {admissible[bi], admissible[bj]};
}

double stem_deviation(const StemValue& a, const StemValue& b) {
    return std::max(abs(a.F1 - b.F1), abs(a.F2 - b.F2));
}

}  // namespace

StemValue sub_stem(const PathSliceFn& f, const ComplexPath& gamma,
                   const std::vector<UnitImaginary>& units,
                   const VerifyOptions& opts) {
    const std::vector<UnitImaginary> admissible =
        slice_units(f.domain(), gamma, units);
    if (admissible.size() < 2) {
        throw InsufficientUnits(
            "sub_stem: fewer than two admissible units at this resolution");
    }
    const auto [I, J] = best_pair(admissible);
    const auto eval = [&f](const SlicePoint& q) { return f.eval(q); };
    const StemValue F = extract_stem(eval, f.domain(), gamma, I, J, opts.delta_min);

    if (opts.verify_pair_choice) {
        // Cross-check with a pair disjoint from the primary, if the sample
        // offers one far enough apart.
        for (std::size_t i = 0; i < admissible.size(); ++i) {
            for (std::size_t j = i + 1; j < admissible.size(); ++j) {
                const UnitImaginary& A = admissible[i];
                const UnitImaginary& B = admissible[j];
                if (distance(A, I) < 1e-12 || distance(A, J) < 1e-12 ||
                    distance(B, I) < 1e-12 || distance(B, J) < 1e-12 ||
                    distance(A, B) < opts.delta_min) {
                    continue;
                }
                const StemValue G =
                    extract_stem(eval, f.domain(), gamma, A, B, opts.delta_min);
                if (stem_deviation(F, G) > opts.pair_tol) {
                    throw StemPairMismatch(
                        "sub_stem: extraction pairs disagree beyond tolerance");
                }
                return F;
            }
        }
    }
    return F;
}

PointStem point_stem(const PathSliceFn& g, const Domain& omega1,
                     const SlicePoint& q, const std::vector<UnitImaginary>& units,
                     const VerifyOptions& opts) {
    if (!omega1.contains(q)) {
        throw std::invalid_argument("point_stem: point outside the domain");
    }
    if (q.is_real()) {
        return {StemValue{g.eval(q), Quaternion{}}, true};
    }
    const PathfinderOptions pf{opts.grid_h, opts.max_step};
    const auto path = find_real_path(omega1, q, pf);
    if (!path) {
        throw NoPathFound("point_stem: no path from the real locus reaches the point");
    }
    return {sub_stem(g, *path, units, opts), false};
}

CheckReport verify_path_slice(const PathSliceFn& f, const Domain& omega,
                              const std::vector<ComplexPath>& corpus,
                              const std::vector<UnitImaginary>& units, double tol) {
    CheckReport report;
    std::size_t indeterminate = 0;
    double max_residual = 0.0;
    for (const ComplexPath& gamma : corpus) {
        const std::vector<UnitImaginary> admissible = slice_units(omega, gamma, units);
        if (admissible.size() < 2) {
            ++indeterminate;
            continue;
        }
        const auto [I, J] = best_pair(admissible);
        const auto eval = [&f](const SlicePoint& q) { return f.eval(q); };
        StemValue F;
        try {
            F = extract_stem(eval, omega, gamma, I, J);
        } catch (const IllConditionedPair&) {
            ++indeterminate;  // admissible cap too narrow at this resolution
            continue;
        }
        for (const UnitImaginary& u : admissible) {
            const double residual =
                abs(f.eval(lift_end(gamma, u)) - represent(F, u));
            max_residual = std::max(max_residual, residual);
            if (residual > tol) {
                json w;
                w["kind"] = "representation-residual";
                w["path"] = gamma;
                w["unit"] = u;
                w["residual"] = residual;
                report.add_witness(std::move(w));
            }
        }
    }
    report.resolution["check"] = "eq-fcg";
    report.resolution["function"] = f.name();
    report.resolution["paths"] = corpus.size();
    report.resolution["units"] = units.size();
    report.resolution["tol"] = tol;
    report.resolution["indeterminate_paths"] = indeterminate;
    report.resolution["max_residual"] = max_residual;
    return report;
}

CheckReport check_stem_symmetries(const PathSliceFn& f, const Domain& omega1,
                                  const std::vector<ComplexPath>& corpus,
                                  const std::vector<UnitImaginary>& units,
                                  double tol) {
    CheckReport report;
    std::size_t indeterminate = 0, real_endpoints = 0;
    double max_conj = 0.0, max_real_f2 = 0.0, max_real_point = 0.0;
    VerifyOptions opts;
    for (const ComplexPath& gamma : corpus) {
        StemValue F, Fc;
        try {
            F = sub_stem(f, gamma, units, opts);
            Fc = sub_stem(f, conj_path(gamma), units, opts);
        } catch (const InsufficientUnits&) {
            ++indeterminate;
            continue;
        } catch (const IllConditionedPair&) {
            ++indeterminate;
            continue;
        }
        const double conj_residual =
            std::max(abs(F.F1 - Fc.F1), abs(F.F2 + Fc.F2));
        max_conj = std::max(max_conj, conj_residual);
        if (conj_residual > tol) {
            json w;
            w["kind"] = "conjugation-symmetry";
            w["path"] = gamma;
            w["residual"] = conj_residual;
            report.add_witness(std::move(w));
        }

        const ComplexPoint end = endpoint(gamma);
        bool end_real = true;
        for (const std::complex<double>& c : end) {
            if (std::fabs(c.imag()) >= kRealEps) end_real = false;
        }
        if (end_real) {
            ++real_endpoints;
            const double f2 = abs(F.F2);
            max_real_f2 = std::max(max_real_f2, f2);
            if (f2 > tol) {
                json w;
                w["kind"] = "real-endpoint-second-component";
                w["path"] = gamma;
                w["residual"] = f2;
                report.add_witness(std::move(w));
            }
            std::vector<double> x(end.size());
            for (std::size_t l = 0; l < end.size(); ++l) x[l] = end[l].real();
            const SlicePoint q = SlicePoint::real(x);
            if (omega1.contains(q)) {
                const PointStem ps = point_stem(f, omega1, q, units, opts);
                const double r = std::max(abs(ps.stem.F1 - f.eval(q)), abs(ps.stem.F2));
                max_real_point = std::max(max_real_point, r);
                if (r > tol) {
                    json w;
                    w["kind"] = "real-point-stem";
                    w["point"] = q;
                    w["residual"] = r;
                    report.add_witness(std::move(w));
                }
            }
        }
    }
    report.resolution["check"] = "stem-symmetries";
    report.resolution["function"] = f.name();
    report.resolution["paths"] = corpus.size();
    report.resolution["real_endpoint_paths"] = real_endpoints;
    report.resolution["indeterminate_paths"] = indeterminate;
    report.resolution["tol"] = tol;
    report.resolution["max_conjugation_residual"] = max_conj;
    report.resolution["max_real_endpoint_f2"] = max_real_f2;
    report.resolution["max_real_point_residual"] = max_real_point;
    return report;
}

StemValue poly_stem(const std::vector<Quaternion>& coeffs, std::complex<double> z) {
    StemValue F;
    std::complex<double> power{1.0, 0.0};
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        F.F1 += power.real() * coeffs[k];
        F.F2 += power.imag() * coeffs[k];
        if (k + 1 < coeffs.size()) power *= z;
    }
    return F;
}

}  // namespace slicestar
