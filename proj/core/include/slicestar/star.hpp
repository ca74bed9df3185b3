#pragma once

#include <string>
#include <vector>

#include "slicestar/stem.hpp"

namespace slicestar {

// The product on H^{2x1} induced by complexified quaternions:
// p * q = (p1 II + p2 sigma)(q1 II + q2 sigma) e1 with sigma^2 = -II.
struct StarConstants {
    Mat2Q identity{Quaternion(1.0), Quaternion{}, Quaternion{}, Quaternion(1.0)};
    Mat2Q sigma{Quaternion{}, Quaternion(-1.0), Quaternion(1.0), Quaternion{}};
    StemValue e1{Quaternion(1.0), Quaternion{}};
};

/// Componentwise: (p1 q1 - p2 q2, p1 q2 + p2 q1), quaternion products in the
/// written order.
StemValue stem_star(const StemValue& p, const StemValue& q);

/// Pointwise star of two stem functions over a common path domain.
PathSliceFn::Stem stem_fn_star(const PathSliceFn::Stem& F, const PathSliceFn::Stem& G);

/// How the domain-pair hypotheses behind a star product were established.
/// Products refuse to build without one, so the conditional nature of the
/// construction stays visible in output metadata.
class StarHypothesis {
public:
    static StarHypothesis from_report(const CheckReport& report);
    static StarHypothesis override_flag(std::string note);

    bool attested() const { return attested_; }
    const json& describe() const { return meta_; }

private:
    bool attested_ = false;
    json meta_;
};

/// The star product f * g on omega1: pointwise value
/// (f(q), J(q) f(q)) . pointstem_g(q), with stem closure
/// gamma -> stem_star(sub_stem(f), sub_stem(g)).  Per-path stems of g are
/// cached by content hash (concurrent reads, single-writer insertion).
PathSliceFn fn_star(const PathSliceFn& f, const PathSliceFn& g,
                    const Domain& omega1, const Domain& omega2,
                    const StarHypothesis& hypothesis,
                    const std::vector<UnitImaginary>& units,
                    const VerifyOptions& opts = {});

/// eval == 1, stem == (1, 0): the unit of the algebra.
PathSliceFn constant_one(Domain domain);

/// Algebra laws at probe points: associativity over a stem-preserving chain
/// (or one self-stem-preserving domain), left/right unit, real bilinearity
/// and distributivity.
CheckReport verify_algebra(const std::vector<PathSliceFn>& fs,
                           const std::vector<Domain>& chain,
                           const std::vector<SlicePoint>& probes, double tol,
                           double unit_tol,
                           const std::vector<UnitImaginary>& units,
                           const StarHypothesis& hypothesis,
                           const VerifyOptions& opts = {});

/// Independent oracle: coefficient convolution c_j = sum_{m+k=j} a_m b_k of
/// right-coefficient polynomials, quaternion products in order.
std::vector<Quaternion> poly_star_oracle(const std::vector<Quaternion>& a,
                                         const std::vector<Quaternion>& b);

}  // namespace slicestar
