#include "slicestar/star.hpp"

#include <memory>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "slicestar/errors.hpp"
#include "slicestar/json_io.hpp"

namespace slicestar {

StemValue stem_star(const StemValue& p, const StemValue& q) {
    return {p.F1 * q.F1 - p.F2 * q.F2, p.F1 * q.F2 + p.F2 * q.F1};
}

PathSliceFn::Stem stem_fn_star(const PathSliceFn::Stem& F,
                               const PathSliceFn::Stem& G) {
    return [F, G](const ComplexPath& gamma) {
        return stem_star(F(gamma), G(gamma));
    };
}

StarHypothesis StarHypothesis::from_report(const CheckReport& report) {
    if (!report.passed()) {
        throw HypothesisNotAttested(
            "star hypothesis: the supplied check report records a violation");
    }
    StarHypothesis h;
    h.attested_ = true;
    h.meta_ = json{{"kind", "checked-report"}, {"resolution", report.resolution}};
    return h;
}

StarHypothesis StarHypothesis::override_flag(std::string note) {
    StarHypothesis h;
    h.attested_ = true;
    h.meta_ = json{{"kind", "caller-override"}, {"note", std::move(note)}};
    return h;
}

namespace {

struct StemCache {
    mutable std::shared_mutex mutex;
    std::unordered_map<std::uint64_t, StemValue> values;

    std::optional<StemValue> lookup(std::uint64_t key) const {
        std::shared_lock lock(mutex);
        const auto it = values.find(key);
        if (it == values.end()) return std::nullopt;
        return it->second;
    }
    void insert(std::uint64_t key, const StemValue& v) {
        std::unique_lock lock(mutex);
        values.emplace(key, v);
    }
};

}  // namespace

PathSliceFn fn_star(const PathSliceFn& f, const PathSliceFn& g,
                    const Domain& omega1, const Domain& omega2,
                    const StarHypothesis& hypothesis,
                    const std::vector<UnitImaginary>& units,
                    const VerifyOptions& opts) {
    if (!hypothesis.attested()) {
        throw HypothesisNotAttested(
            "fn_star requires a passing check report or an explicit override");
    }
    auto cache = std::make_shared<StemCache>();

    auto point_stem_of_g = [g, omega1, units, opts, cache](const SlicePoint& q) {
        if (q.is_real()) {
            return StemValue{g.eval(q), Quaternion{}};
        }
        const PathfinderOptions pf{opts.grid_h, opts.max_step};
        const auto path = find_real_path(omega1, q, pf);
        if (!path) {
            throw NoPathFound("fn_star: no path from the real locus reaches " +
                              json(q).dump());
        }
        const std::uint64_t key = content_hash(*path);
        if (auto hit = cache->lookup(key)) return *hit;
        const StemValue F = sub_stem(g, *path, units, opts);
        cache->insert(key, F);
        return F;
    };

    auto eval = [f, point_stem_of_g](const SlicePoint& q) {
        const StemValue Fg = point_stem_of_g(q);
        const Quaternion fq = f.eval(q);
        Quaternion value = fq * Fg.F1;
        if (!q.is_real()) {
            value += q.unit()->as_quaternion() * fq * Fg.F2;
        }
        return value;
    };

    auto stem = [f, g, units, opts](const ComplexPath& gamma) {
        return stem_star(sub_stem(f, gamma, units, opts),
                         sub_stem(g, gamma, units, opts));
    };

    PathSliceFn out = with_stem(
        PathSliceFn(f.name() + "*" + g.name(), omega1, std::move(eval)),
        std::move(stem));
    out.meta["product"] = json{{"left", f.name()},
                               {"right", g.name()},
                               {"omega2", omega2.name()},
                               {"hypothesis", hypothesis.describe()},
                               {"units", units.size()}};
    if (f.coefficients() && g.coefficients()) {
        out = with_coefficients(std::move(out),
                                poly_star_oracle(*f.coefficients(), *g.coefficients()));
    }
    return out;
}

PathSliceFn constant_one(Domain domain) {
    PathSliceFn one = make_constant(Quaternion(1.0), std::move(domain));
    return with_stem(std::move(one), [](const ComplexPath&) {
        return StemValue{Quaternion(1.0), Quaternion{}};
    });
}

namespace {

double value_gap(const Quaternion& a, const Quaternion& b) { return abs(a - b); }

}  // namespace

CheckReport verify_algebra(const std::vector<PathSliceFn>& fs,
                           const std::vector<Domain>& chain,
                           const std::vector<SlicePoint>& probes, double tol,
                           double unit_tol,
                           const std::vector<UnitImaginary>& units,
                           const StarHypothesis& hypothesis,
                           const VerifyOptions& opts) {
    if (fs.size() < 3) {
        throw std::invalid_argument("verify_algebra needs at least three functions");
    }
    if (chain.empty()) {
        throw std::invalid_argument("verify_algebra needs a domain chain");
    }
    const Domain& o1 = chain.front();
    const Domain& o2 = chain.size() >= 2 ? chain[1] : chain.front();
    const Domain& o3 = chain.size() >= 3 ? chain[2] : chain.back();

    CheckReport report;
    double max_assoc = 0.0, max_unit = 0.0, max_linear = 0.0;

    auto check_law = [&](const std::string& law, const SlicePoint& q,
                         const Quaternion& lhs, const Quaternion& rhs,
                         double bound, double& tracker) {
        const double gap = value_gap(lhs, rhs);
        tracker = std::max(tracker, gap);
        if (gap > bound) {
            json w;
            w["kind"] = law;
            w["point"] = q;
            w["residual"] = gap;
            report.add_witness(std::move(w));
        }
    };

    const PathSliceFn one = constant_one(o1);
    for (std::size_t t = 0; t + 2 < fs.size(); ++t) {
        const PathSliceFn& f = fs[t];
        const PathSliceFn& g = fs[t + 1];
        const PathSliceFn& h = fs[t + 2];

        const PathSliceFn gh = fn_star(g, h, o2, o3, hypothesis, units, opts);
        const PathSliceFn fg = fn_star(f, g, o1, o2, hypothesis, units, opts);
        const PathSliceFn left = fn_star(fg, h, o1, o3, hypothesis, units, opts);
        const PathSliceFn right = fn_star(f, gh, o1, o2, hypothesis, units, opts);

        const PathSliceFn one_f = fn_star(one, f, o1, o2, hypothesis, units, opts);
        const PathSliceFn f_one = fn_star(f, one, o1, o2, hypothesis, units, opts);

        const double lambda = 2.0;
        const PathSliceFn sf_g =
            fn_star(scale(lambda, f), g, o1, o2, hypothesis, units, opts);
        const PathSliceFn f_sg =
            fn_star(f, scale(lambda, g), o1, o2, hypothesis, units, opts);
        const PathSliceFn fplusg_h =
            fn_star(add(f, g), h, o1, o3, hypothesis, units, opts);
        const PathSliceFn f_h = fn_star(f, h, o1, o3, hypothesis, units, opts);
        const PathSliceFn g_h = fn_star(g, h, o1, o3, hypothesis, units, opts);

        for (const SlicePoint& q : probes) {
            if (!o1.contains(q)) continue;
            check_law("associativity", q, left.eval(q), right.eval(q), tol,
                      max_assoc);
            check_law("left-unit", q, one_f.eval(q), f.eval(q), unit_tol, max_unit);
            check_law("right-unit", q, f_one.eval(q), f.eval(q), unit_tol, max_unit);
            const Quaternion scaled = lambda * fg.eval(q);
            check_law("scalar-left", q, sf_g.eval(q), scaled, unit_tol, max_linear);
            check_law("scalar-right", q, f_sg.eval(q), scaled, unit_tol, max_linear);
            check_law("distributivity", q, fplusg_h.eval(q),
                      f_h.eval(q) + g_h.eval(q), unit_tol, max_linear);
        }
    }

    report.resolution["check"] = "algebra-laws";
    report.resolution["functions"] = fs.size();
    report.resolution["probes"] = probes.size();
    report.resolution["tol"] = tol;
    report.resolution["unit_tol"] = unit_tol;
    report.resolution["max_associativity_residual"] = max_assoc;
    report.resolution["max_unit_residual"] = max_unit;
    report.resolution["max_linearity_residual"] = max_linear;
    return report;
}

std::vector<Quaternion> poly_star_oracle(const std::vector<Quaternion>& a,
                                         const std::vector<Quaternion>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Quaternion> c(a.size() + b.size() - 1);
    for (std::size_t m = 0; m < a.size(); ++m) {
        for (std::size_t k = 0; k < b.size(); ++k) {
            c[m + k] += a[m] * b[k];
        }
    }
    return c;
}

}  // namespace slicestar
