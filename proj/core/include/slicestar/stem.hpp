#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "slicestar/domain.hpp"
#include "slicestar/path.hpp"
#include "slicestar/quaternion.hpp"
#include "slicestar/report.hpp"

namespace slicestar {

/// Column vector of H^{2x1}: the value of a stem function.
struct StemValue {
    Quaternion F1;
    Quaternion F2;
};

inline StemValue operator+(const StemValue& a, const StemValue& b) {
    return {a.F1 + b.F1, a.F2 + b.F2};
}
inline StemValue operator*(double s, const StemValue& v) {
    return {s * v.F1, s * v.F2};
}

/// Row-major 2x2 quaternion matrix.
struct Mat2Q {
    Quaternion a, b, c, d;
};

Mat2Q operator*(const Mat2Q& m, const Mat2Q& n);
StemValue apply(const Mat2Q& m, const Quaternion& v1, const Quaternion& v2);

/// Inverse of [[1, I], [1, J]]: (I - J)^{-1} [[I, -J], [1, -1]].
/// Throws IllConditionedPair when |I - J| < delta_min.
Mat2Q two_by_two_inverse(const UnitImaginary& I, const UnitImaginary& J,
                         double delta_min = 0.5);

/// The representation pairing (1, I) F = F1 + I F2.
Quaternion represent(const StemValue& F, const UnitImaginary& unit);
/// Real points pair with (1, 0).
Quaternion represent(const StemValue& F, const std::optional<UnitImaginary>& unit);

struct VerifyOptions {
    double tol = 1e-9;        // representation residual tolerance
    double pair_tol = 1e-9;   // agreement between extraction pairs
    double delta_min = 0.5;   // conditioning floor for |I - J|
    double max_step = 0.05;   // path refinement for membership tests
    double grid_h = 0.05;     // BFS grid step for point-based lookups
    bool verify_pair_choice = false;
};

/// Function on a domain of the slice cone together with the machinery needed
/// to read its stem: a pointwise evaluation, and optionally a stored stem
/// closure (whose evaluation goes through the representation identity).
class PathSliceFn {
public:
    using Eval = std::function<Quaternion(const SlicePoint&)>;
    using Stem = std::function<StemValue(const ComplexPath&)>;

    PathSliceFn() = default;
    /// Point-backed function; the stem is recovered by extraction.
    PathSliceFn(std::string name, Domain domain, Eval eval);

    /// Stem-backed function: evaluation finds a path into the point's slice
    /// and applies the representation identity.
    static PathSliceFn stem_backed(std::string name, Domain domain, Stem stem,
                                   const VerifyOptions& opts = {});

    const std::string& name() const { return name_; }
    const Domain& domain() const { return domain_; }
    Quaternion eval(const SlicePoint& q) const { return eval_(q); }

    bool has_stem() const { return static_cast<bool>(stem_); }
    /// Stored stem closure; only valid when has_stem().
    StemValue stem(const ComplexPath& gamma) const { return stem_(gamma); }

    /// Right coefficients when the function is a polynomial; drives oracle
    /// comparisons.
    const std::optional<std::vector<Quaternion>>& coefficients() const {
        return coeffs_;
    }

    json meta = json::object();

private:
    friend PathSliceFn with_coefficients(PathSliceFn fn, std::vector<Quaternion> c);
    friend PathSliceFn with_stem(PathSliceFn fn, Stem stem);

    std::string name_;
    Domain domain_;
    Eval eval_;
    Stem stem_;
    std::optional<std::vector<Quaternion>> coeffs_;
};

PathSliceFn with_coefficients(PathSliceFn fn, std::vector<Quaternion> c);
PathSliceFn with_stem(PathSliceFn fn, PathSliceFn::Stem stem);

/// f(q) = sum_k q^k a_k with right quaternion coefficients (n = 1).
PathSliceFn make_polynomial(std::vector<Quaternion> coeffs, Domain domain,
                            std::string name = "poly");
PathSliceFn make_constant(const Quaternion& c, Domain domain);
/// f(q) = q (n = 1).
PathSliceFn make_identity(Domain domain);
/// The i-coefficient of q_1 in H coordinates; not path-slice.
PathSliceFn make_component_x(Domain domain);
/// f(q) = conj(q_1); anti-holomorphic on every slice.
PathSliceFn make_conj_identity(Domain domain);
/// Truncated exponential series sum_{k<=terms} q^k / k!; smooth, slice
/// regular, with non-vanishing third derivative.
PathSliceFn make_exp_series(Domain domain, int terms = 12);

/// Pointwise sum; coefficients combine when both sides are polynomials.
PathSliceFn add(const PathSliceFn& f, const PathSliceFn& g);
/// Real scalar multiple.
PathSliceFn scale(double lambda, const PathSliceFn& f);

/// Extracts the stem of f over gamma from two admissible units via the 2x2
/// inverse.  Throws UnitsNotAdmissible when a lift leaves omega2, or
/// IllConditionedPair.
StemValue extract_stem(const PathSliceFn::Eval& eval, const Domain& omega2,
                       const ComplexPath& gamma, const UnitImaginary& I,
                       const UnitImaginary& J, double delta_min = 0.5);

/// Stem of f over gamma from the best-conditioned admissible pair in
/// f.domain(): an antipodal pair when available, else the farthest.  Throws
/// InsufficientUnits when fewer than two units are admissible; with
/// verify_pair_choice set, cross-checks a second pair and throws
/// StemPairMismatch beyond pair_tol.
StemValue sub_stem(const PathSliceFn& f, const ComplexPath& gamma,
                   const std::vector<UnitImaginary>& units,
                   const VerifyOptions& opts = {});

struct PointStem {
    StemValue stem;
    /// True for real points, where the value is definitional.  For non-real
    /// points, run the path-independence check to establish it.
    bool well_definedness_verified = false;
};

/// Stem read at a point: (g(q), 0) for real q, otherwise sub_stem over a path
/// into the point's slice (straight first, then grid BFS).  Throws
/// NoPathFound / InsufficientUnits.
PointStem point_stem(const PathSliceFn& g, const Domain& omega1,
                     const SlicePoint& q, const std::vector<UnitImaginary>& units,
                     const VerifyOptions& opts = {});

/// Checks the representation identity f(gamma^I(1)) = (1, I) F(gamma) over a
/// corpus; a violation carries (path, unit, residual).
CheckReport verify_path_slice(const PathSliceFn& f, const Domain& omega,
                              const std::vector<ComplexPath>& corpus,
                              const std::vector<UnitImaginary>& units, double tol);

/// Conjugation symmetry F(gamma) = diag(1,-1) F(conj gamma), vanishing second
/// component at real endpoints, and the real-point stem (f, 0).
CheckReport check_stem_symmetries(const PathSliceFn& f, const Domain& omega1,
                                  const std::vector<ComplexPath>& corpus,
                                  const std::vector<UnitImaginary>& units,
                                  double tol = 1e-10);

/// Independent oracle: stem of a right-coefficient polynomial at plane point
/// z via complex powers z^k = alpha_k + i beta_k (n = 1).
StemValue poly_stem(const std::vector<Quaternion>& coeffs, std::complex<double> z);

/// Evaluates a right-coefficient polynomial at a quaternion.
Quaternion poly_eval(const std::vector<Quaternion>& coeffs, const Quaternion& q);

}  // namespace slicestar
