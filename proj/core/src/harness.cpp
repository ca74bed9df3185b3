#include "slicestar/harness.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <random>

#include "slicestar/errors.hpp"
#include "slicestar/json_io.hpp"
#include "slicestar/reg_check.hpp"
#include "slicestar/star.hpp"
#include "slicestar/stem.hpp"

namespace slicestar {

namespace {

// mt19937_64 is fully specified by the standard; scaling by hand keeps the
// stream identical across library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    std::uint64_t next() { return eng_(); }
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

private:
    std::mt19937_64 eng_;
};

Quaternion random_quaternion(Rng& rng) {
    return {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0),
            rng.uniform(-1.0, 1.0)};
}

std::vector<Quaternion> random_coefficients(Rng& rng, int max_degree) {
    const int degree = static_cast<int>(rng.next() % (max_degree + 1));
    std::vector<Quaternion> coeffs;
    for (int k = 0; k <= degree; ++k) coeffs.push_back(random_quaternion(rng));
    return coeffs;
}

std::vector<SlicePoint> random_points(Rng& rng, const Domain& domain,
                                      const std::vector<UnitImaginary>& units,
                                      std::size_t count, bool real_only) {
    const PlaneBox& box = domain.bounds();
    const std::size_t n = domain.dim();
    std::vector<SlicePoint> out;
    std::size_t attempts = 0;
    while (out.size() < count && attempts < count * 200) {
        ++attempts;
        std::vector<double> x(n), y(n);
        for (std::size_t l = 0; l < n; ++l) {
            x[l] = rng.uniform(box.x_lo[l], box.x_hi[l]);
            y[l] = real_only ? 0.0 : rng.uniform(0.0, box.y_abs[l]);
        }
        SlicePoint p =
            real_only
                ? SlicePoint::real(std::move(x))
                : SlicePoint::make(std::move(x), std::move(y),
                                   units[rng.next() % units.size()]);
        if (domain.contains(p)) out.push_back(std::move(p));
    }
    return out;
}

double tolerance(const Scenario& s, const std::string& key, double fallback) {
    return s.tolerances.value(key, fallback);
}

// Lazily built shared inputs for all checks of one suite run.
struct SuiteContext {
    const Scenario& scenario;
    Domain omega;
    std::vector<UnitImaginary> units;
    std::vector<UnitImaginary> domain_units;
    std::vector<UnitImaginary> cr_units;
    Corpus corpus;
    std::vector<ComplexPath> stem_paths;  // capped working corpus
    std::vector<PathSliceFn> poly_pool;   // degree <= 4, representation checks
    std::vector<PathSliceFn> star_pool;   // degree <= 3, product checks
    VerifyOptions opts;

    explicit SuiteContext(const Scenario& s)
        : scenario(s),
          omega(make_domain(s.domain_spec.at("name").get<std::string>(),
                            s.domain_spec.value("params", json::object()))) {
        units = sphere_sample(s.units, s.seed);
        domain_units = sphere_sample(s.domain_units, s.seed);
        cr_units = sphere_sample(12, s.seed);
        CorpusOptions copts;
        copts.max_step = s.max_step;
        copts.bfs_grid_h = s.grid_h;
        corpus = build_corpus(omega, copts);
        stem_paths = corpus.paths;
        if (stem_paths.size() > 50) stem_paths.resize(50);
        opts.max_step = s.max_step;
        opts.grid_h = s.grid_h;

        if (s.functions.is_array() && !s.functions.empty()) {
            for (const json& spec : s.functions) {
                poly_pool.push_back(fn_from_json(spec, omega));
            }
            for (const PathSliceFn& f : poly_pool) {
                if (f.coefficients()) star_pool.push_back(f);
            }
        } else {
            Rng poly_rng(s.seed * 0x9e3779b97f4a7c15ULL + 1);
            for (int k = 0; k < 20; ++k) {
                poly_pool.push_back(make_polynomial(
                    random_coefficients(poly_rng, 4), omega,
                    "p" + std::to_string(k)));
            }
        }
        if (star_pool.size() < 3) {
            star_pool.clear();
            Rng star_rng(s.seed * 0x9e3779b97f4a7c15ULL + 2);
            for (int k = 0; k < 10; ++k) {
                star_pool.push_back(make_polynomial(
                    random_coefficients(star_rng, 3), omega,
                    "s" + std::to_string(k)));
            }
        }
    }

    const CheckReport& self_report() {
        if (!self_report_) {
            self_report_ = check_self_stem_preserving(
                omega, corpus, domain_units,
                PathfinderOptions{scenario.grid_h, scenario.max_step});
        }
        return *self_report_;
    }

    StarHypothesis attestation() {
        const CheckReport& r = self_report();
        if (r.passed()) return StarHypothesis::from_report(r);
        return StarHypothesis::override_flag("scenario-declared domain hypotheses");
    }

private:
    std::optional<CheckReport> self_report_;
};

using CheckFn = std::function<CheckReport(SuiteContext&)>;

CheckReport merge(std::vector<CheckReport> parts, json resolution) {
    CheckReport out;
    double max_residual = 0.0;
    std::size_t indeterminate = 0;
    for (CheckReport& part : parts) {
        if (!part.passed()) out.verdict = Verdict::violation_found;
        for (json& w : part.witnesses) out.witnesses.push_back(std::move(w));
        if (part.resolution.contains("max_residual")) {
            max_residual = std::max(max_residual,
                                    part.resolution["max_residual"].get<double>());
        }
        if (part.resolution.contains("indeterminate_paths")) {
            indeterminate +=
                part.resolution["indeterminate_paths"].get<std::size_t>();
        }
    }
    out.resolution = std::move(resolution);
    out.resolution["max_residual"] = max_residual;
    out.resolution["indeterminate_paths"] = indeterminate;
    return out;
}

CheckReport check_eq_fcg(SuiteContext& ctx) {
    const double tol = tolerance(ctx.scenario, "representation", 1e-9);
    std::vector<CheckReport> parts;
    for (const PathSliceFn& f : ctx.poly_pool) {
        parts.push_back(
            verify_path_slice(f, ctx.omega, ctx.stem_paths, ctx.units, tol));
    }
    return merge(std::move(parts),
                 json{{"check", "eq-fcg"},
                      {"functions", ctx.poly_pool.size()},
                      {"paths", ctx.stem_paths.size()},
                      {"units", ctx.units.size()},
                      {"tol", tol}});
}

CheckReport check_pair_independence(SuiteContext& ctx) {
    const double tol = tolerance(ctx.scenario, "pair", 1e-9);
    const std::vector<std::pair<UnitImaginary, UnitImaginary>> pairs = {
        {unit_i(), -unit_i()}, {unit_j(), -unit_j()}, {unit_i(), unit_k()}};
    CheckReport report;
    double max_dev = 0.0;
    std::size_t indeterminate = 0;
    for (const PathSliceFn& f : ctx.poly_pool) {
        const auto eval = [&f](const SlicePoint& q) { return f.eval(q); };
        for (const ComplexPath& gamma : ctx.stem_paths) {
            std::vector<StemValue> stems;
            for (const auto& [I, J] : pairs) {
                if (slice_units(ctx.omega, gamma, {I, J}).size() != 2) continue;
                stems.push_back(extract_stem(eval, ctx.omega, gamma, I, J));
            }
            if (stems.size() < 2) {
                ++indeterminate;
                continue;
            }
            for (std::size_t a = 0; a + 1 < stems.size(); ++a) {
                const double dev =
                    std::max(abs(stems[a].F1 - stems[a + 1].F1),
                             abs(stems[a].F2 - stems[a + 1].F2));
                max_dev = std::max(max_dev, dev);
                if (dev > tol) {
                    json w;
                    w["kind"] = "pair-dependent-stem";
                    w["function"] = f.name();
                    w["path"] = gamma;
                    w["residual"] = dev;
                    report.add_witness(std::move(w));
                }
            }
        }
    }
    report.resolution = json{{"check", "eq-almost-stem-2091"},
                             {"functions", ctx.poly_pool.size()},
                             {"paths", ctx.stem_paths.size()},
                             {"indeterminate", indeterminate},
                             {"tol", tol},
                             {"max_residual", max_dev}};
    return report;
}

// One pass shared by the three symmetry keys.
CheckReport symmetry_outcome(SuiteContext& ctx, const std::string& which) {
    const double tol = tolerance(ctx.scenario, "symmetry", 1e-10);
    CheckReport report;
    double max_residual = 0.0;
    std::size_t real_endpoints = 0, indeterminate = 0;
    for (const PathSliceFn& f : ctx.poly_pool) {
        for (const ComplexPath& gamma : ctx.stem_paths) {
            StemValue F;
            try {
                F = sub_stem(f, gamma, ctx.units, ctx.opts);
            } catch (const InsufficientUnits&) {
                ++indeterminate;
                continue;
            } catch (const IllConditionedPair&) {
                ++indeterminate;
                continue;
            }
            const ComplexPoint end = endpoint(gamma);
            bool end_real = true;
            for (const std::complex<double>& c : end) {
                if (std::fabs(c.imag()) >= kRealEps) end_real = false;
            }
            double residual = -1.0;
            json w;
            if (which == "eq-fgamma-conj") {
                const StemValue Fc = sub_stem(f, conj_path(gamma), ctx.units, ctx.opts);
                residual = std::max(abs(F.F1 - Fc.F1), abs(F.F2 + Fc.F2));
                w["kind"] = "conjugation-symmetry";
            } else if (which == "eq-fgamma-R") {
                if (!end_real) continue;
                ++real_endpoints;
                residual = abs(F.F2);
                w["kind"] = "real-endpoint-second-component";
            } else {  // eq-lfo1
                if (!end_real) continue;
                ++real_endpoints;
                std::vector<double> x(end.size());
                for (std::size_t l = 0; l < end.size(); ++l) x[l] = end[l].real();
                const SlicePoint q = SlicePoint::real(x);
                if (!ctx.omega.contains(q)) continue;
                const PointStem ps = point_stem(f, ctx.omega, q, ctx.units, ctx.opts);
                residual = std::max(abs(ps.stem.F1 - f.eval(q)), abs(ps.stem.F2));
                w["kind"] = "real-point-stem";
            }
            if (residual < 0.0) continue;
            max_residual = std::max(max_residual, residual);
            if (residual > tol) {
                w["function"] = f.name();
                w["path"] = gamma;
                w["residual"] = residual;
                report.add_witness(std::move(w));
            }
        }
    }
    report.resolution = json{{"check", which},
                             {"functions", ctx.poly_pool.size()},
                             {"paths", ctx.stem_paths.size()},
                             {"real_endpoint_paths", real_endpoints},
                             {"indeterminate", indeterminate},
                             {"tol", tol},
                             {"max_residual", max_residual}};
    return report;
}

CheckReport check_stem_coincide(SuiteContext& ctx) {
    const double tol = tolerance(ctx.scenario, "coincide", 1e-9);
    CheckReport report;
    double max_residual = 0.0;
    std::size_t indeterminate = 0, tested = 0;
    const std::size_t pool = std::min<std::size_t>(5, ctx.poly_pool.size());
    for (std::size_t p = 0; p < pool; ++p) {
        const PathSliceFn& f = ctx.poly_pool[p];
        const auto eval = [&f](const SlicePoint& q) { return f.eval(q); };
        for (const PathPair& pair : ctx.corpus.pairs) {
            const auto ua = slice_units(ctx.omega, pair.alpha, ctx.units);
            std::vector<UnitImaginary> shared;
            for (const UnitImaginary& u : slice_units(ctx.omega, pair.beta, ua)) {
                shared.push_back(u);
            }
            if (shared.size() < 2) {
                ++indeterminate;  // coincidence needs two shared units
                continue;
            }
            // extract both stems from the same shared pair
            UnitImaginary I = shared[0], J = shared[1];
            double best = distance(I, J);
            for (std::size_t a = 0; a < shared.size(); ++a) {
                for (std::size_t b = a + 1; b < shared.size(); ++b) {
                    if (distance(shared[a], shared[b]) > best) {
                        best = distance(shared[a], shared[b]);
                        I = shared[a];
                        J = shared[b];
                    }
                }
            }
            StemValue Fa, Fb;
            try {
                Fa = extract_stem(eval, ctx.omega, pair.alpha, I, J);
                Fb = extract_stem(eval, ctx.omega, pair.beta, I, J);
            } catch (const IllConditionedPair&) {
                ++indeterminate;
                continue;
            }
            const double residual =
                std::max(abs(Fa.F1 - Fb.F1), abs(Fa.F2 - Fb.F2));
            max_residual = std::max(max_residual, residual);
            ++tested;
            if (residual > tol) {
                json w;
                w["kind"] = "stem-coincidence";
                w["function"] = f.name();
                w["alpha"] = pair.alpha;
                w["beta"] = pair.beta;
                w["residual"] = residual;
                report.add_witness(std::move(w));
            }
        }
    }
    report.resolution = json{{"check", "eq-stemcoincide"},
                             {"pairs_tested", tested},
                             {"indeterminate_pairs", indeterminate},
                             {"tol", tol},
                             {"max_residual", max_residual}};
    return report;
}

// Containment of path classes under a stem-preserving pair.  With a single
// suite domain the pair is (omega, omega); cross-domain pairs are exercised
// by unit tests.
CheckReport check_containment(SuiteContext& ctx) {
    CheckReport report;
    std::size_t participating = 0;
    for (const ComplexPath& gamma : ctx.corpus.paths) {
        const auto in_omega1 = slice_units(ctx.omega, gamma, ctx.domain_units);
        if (in_omega1.size() < 2) continue;  // not stem-preserving material
        ++participating;
        if (slice_units(ctx.omega, gamma, in_omega1).empty()) {
            json w;
            w["kind"] = "containment";
            w["path"] = gamma;
            report.add_witness(std::move(w));
        }
    }
    report.resolution = json{{"check", "eq-mpmn"},
                             {"paths", participating},
                             {"max_residual", 0.0}};
    return report;
}

CheckReport check_overline(SuiteContext& ctx) {
    const double tol = tolerance(ctx.scenario, "overline", 1e-10);
    CheckReport report;
    double max_residual = 0.0;
    Rng rng(ctx.scenario.seed * 0x9e3779b97f4a7c15ULL + 3);
    std::vector<Quaternion> cs;
    for (int k = 0; k < 3; ++k) cs.push_back(random_quaternion(rng));
    const std::size_t pool = std::min<std::size_t>(5, ctx.poly_pool.size());
    const std::size_t paths = std::min<std::size_t>(20, ctx.stem_paths.size());
    for (std::size_t p = 0; p < pool; ++p) {
        const PathSliceFn& g = ctx.poly_pool[p];
        for (std::size_t t = 0; t < paths; ++t) {
            const ComplexPath& gamma = ctx.stem_paths[t];
            const auto admissible = slice_units(ctx.omega, gamma, ctx.units);
            if (admissible.size() < 2) continue;
            const UnitImaginary I = admissible.front();
            StemValue F, Fc, P;
            const SlicePoint q = lift_end(gamma, I);
            try {
                F = sub_stem(g, gamma, ctx.units, ctx.opts);
                Fc = sub_stem(g, conj_path(gamma), ctx.units, ctx.opts);
                P = point_stem(g, ctx.omega, q, ctx.units, ctx.opts).stem;
            } catch (const InsufficientUnits&) {
                continue;
            } catch (const IllConditionedPair&) {
                continue;
            }
            for (const Quaternion& c : cs) {
                const Quaternion qI = I.as_quaternion();
                const Quaternion e1 = c * F.F1 + (qI * c) * F.F2;
                const Quaternion e2 = c * Fc.F1 + ((-qI) * c) * Fc.F2;
                Quaternion e3 = c * P.F1;
                if (!q.is_real()) {
                    e3 += (q.unit()->as_quaternion() * c) * P.F2;
                }
                const double residual = std::max(abs(e1 - e2), abs(e1 - e3));
                max_residual = std::max(max_residual, residual);
                if (residual > tol) {
                    json w;
                    w["kind"] = "overline-identity";
                    w["function"] = g.name();
                    w["path"] = gamma;
                    w["residual"] = residual;
                    report.add_witness(std::move(w));
                }
            }
        }
    }
    report.resolution = json{{"check", "eq-overline"},
                             {"tol", tol},
                             {"max_residual", max_residual}};
    return report;
}

CheckReport check_real_restriction(SuiteContext& ctx) {
    const double tol = tolerance(ctx.scenario, "real-restriction", 1e-10);
    CheckReport report;
    double max_residual = 0.0;
    Rng rng(ctx.scenario.seed * 0x9e3779b97f4a7c15ULL + 4);
    const std::vector<SlicePoint> probes =
        random_points(rng, ctx.omega, ctx.units, 100, /*real_only=*/true);
    const StarHypothesis hyp = ctx.attestation();
    std::vector<std::pair<PathSliceFn, PathSliceFn>> combos;
    for (std::size_t k = 0; k + 1 < ctx.star_pool.size() && combos.size() < 5; ++k) {
        combos.emplace_back(ctx.star_pool[k], ctx.star_pool[k + 1]);
    }
    combos.emplace_back(make_constant({0, 0, 1, 0}, ctx.omega),
                        make_identity(ctx.omega));
    for (const auto& [f, g] : combos) {
        const PathSliceFn product =
            fn_star(f, g, ctx.omega, ctx.omega, hyp, ctx.units, ctx.opts);
        for (const SlicePoint& q : probes) {
            const double residual = abs(product.eval(q) - f.eval(q) * g.eval(q));
            max_residual = std::max(max_residual, residual);
            if (residual > tol) {
                json w;
                w["kind"] = "real-restriction";
                w["point"] = q;
                w["residual"] = residual;
                report.add_witness(std::move(w));
            }
        }
    }
    report.resolution = json{{"check", "eq-llfg"},
                             {"real_probes", probes.size()},
                             {"tol", tol},
                             {"max_residual", max_residual}};
    return report;
}

CheckReport check_star_oracle(SuiteContext& ctx) {
    const double tol = tolerance(ctx.scenario, "oracle", 1e-9);
    CheckReport report;
    double max_rel = 0.0;
    Rng rng(ctx.scenario.seed * 0x9e3779b97f4a7c15ULL + 5);
    const std::vector<SlicePoint> probes =
        random_points(rng, ctx.omega, ctx.units, 1000, false);
    const StarHypothesis hyp = ctx.attestation();

    for (const PathSliceFn& f : ctx.star_pool) {
        for (const PathSliceFn& g : ctx.star_pool) {
            const PathSliceFn product =
                fn_star(f, g, ctx.omega, ctx.omega, hyp, ctx.units, ctx.opts);
            const std::vector<Quaternion> oracle =
                poly_star_oracle(*f.coefficients(), *g.coefficients());
            for (const SlicePoint& q : probes) {
                const Quaternion expected = poly_eval(oracle, q.component(0));
                const Quaternion got = product.eval(q);
                const double rel =
                    abs(got - expected) / std::max(1.0, abs(expected));
                max_rel = std::max(max_rel, rel);
                if (rel > tol) {
                    json w;
                    w["kind"] = "oracle-mismatch";
                    w["left"] = f.name();
                    w["right"] = g.name();
                    w["point"] = q;
                    w["residual"] = rel;
                    report.add_witness(std::move(w));
                }
            }
        }
    }

    // Pinned identities.
    Rng crng(ctx.scenario.seed * 0x9e3779b97f4a7c15ULL + 6);
    const Quaternion a = random_quaternion(crng);
    const Quaternion b = random_quaternion(crng);
    const PathSliceFn id = make_identity(ctx.omega);
    const PathSliceFn qa = make_polynomial({Quaternion{}, a}, ctx.omega, "qa");
    const PathSliceFn qb = make_polynomial({Quaternion{}, b}, ctx.omega, "qb");
    const PathSliceFn qq =
        fn_star(id, id, ctx.omega, ctx.omega, hyp, ctx.units, ctx.opts);
    const PathSliceFn qaqb =
        fn_star(qa, qb, ctx.omega, ctx.omega, hyp, ctx.units, ctx.opts);
    double pinned = 0.0;
    for (std::size_t t = 0; t < std::min<std::size_t>(50, probes.size()); ++t) {
        const Quaternion v = probes[t].component(0);
        pinned = std::max(pinned, abs(qq.eval(probes[t]) - v * v));
        pinned = std::max(pinned, abs(qaqb.eval(probes[t]) - v * v * a * b));
    }
    // (j)*(q) at q = 1 + 2i: x j + I j y with I = i gives j + 2k.
    const SlicePoint witness_point = SlicePoint::make({1.0}, {2.0}, unit_i());
    const Domain wide = make_euclidean_ball(std::vector<double>{0.0}, 3.0);
    const PathSliceFn cjw = make_constant({0, 0, 1, 0}, wide);
    const PathSliceFn idw = make_identity(wide);
    const PathSliceFn jqw =
        fn_star(cjw, idw, wide, wide,
                StarHypothesis::override_flag("euclidean ball about the origin"),
                ctx.units, ctx.opts);
    pinned = std::max(pinned,
                      abs(jqw.eval(witness_point) - Quaternion{0, 0, 1, 2}));
    max_rel = std::max(max_rel, pinned);
    if (pinned > tol) {
        json w;
        w["kind"] = "pinned-identity";
        w["residual"] = pinned;
        report.add_witness(std::move(w));
    }

    report.resolution = json{{"check", "star-oracle"},
                             {"pairs", ctx.star_pool.size() * ctx.star_pool.size()},
                             {"probes", probes.size()},
                             {"tol", tol},
                             {"max_residual", max_rel}};
    return report;
}

CheckReport check_algebra(SuiteContext& ctx, bool associativity) {
    const double assoc_tol = tolerance(ctx.scenario, "associativity", 1e-9);
    const double unit_tol = tolerance(ctx.scenario, "unit", 1e-10);
    Rng rng(ctx.scenario.seed * 0x9e3779b97f4a7c15ULL + 7);
    const std::vector<SlicePoint> probes =
        random_points(rng, ctx.omega, ctx.units, 20, false);
    std::vector<PathSliceFn> fs = ctx.star_pool;
    fs.push_back(ctx.star_pool[0]);
    fs.push_back(ctx.star_pool[1]);  // ten consecutive triples
    CheckReport full =
        verify_algebra(fs, {ctx.omega}, probes, assoc_tol, unit_tol, ctx.units,
                       ctx.attestation(), ctx.opts);
    CheckReport report;
    const char* kinds_assoc[] = {"associativity"};
    const char* kinds_alg[] = {"left-unit", "right-unit", "scalar-left",
                               "scalar-right", "distributivity"};
    for (const json& w : full.witnesses) {
        const std::string kind = w.value("kind", "");
        const bool is_assoc = kind == kinds_assoc[0];
        bool is_alg = false;
        for (const char* k : kinds_alg) {
            if (kind == k) is_alg = true;
        }
        if ((associativity && is_assoc) || (!associativity && is_alg)) {
            report.witnesses.push_back(w);
            report.verdict = Verdict::violation_found;
        }
    }
    report.resolution =
        json{{"check", associativity ? "eq-associative" : "thm-algebra"},
             {"triples", fs.size() - 2},
             {"probes", probes.size()},
             {"tol", associativity ? assoc_tol : unit_tol},
             {"max_residual",
              associativity
                  ? full.resolution["max_associativity_residual"].get<double>()
                  : std::max(full.resolution["max_unit_residual"].get<double>(),
                             full.resolution["max_linearity_residual"]
                                 .get<double>())}};
    return report;
}

CheckReport check_star_closure(SuiteContext& ctx) {
    const double tol = tolerance(ctx.scenario, "closure", 1e-9);
    CheckReport report;
    double max_residual = 0.0;
    const StarHypothesis hyp = ctx.attestation();
    const std::size_t paths = std::min<std::size_t>(20, ctx.stem_paths.size());
    std::vector<CheckReport> rep_parts;
    for (std::size_t k = 0; k + 1 < ctx.star_pool.size() && k < 6; ++k) {
        const PathSliceFn& f = ctx.star_pool[k];
        const PathSliceFn& g = ctx.star_pool[k + 1];
        const PathSliceFn product =
            fn_star(f, g, ctx.omega, ctx.omega, hyp, ctx.units, ctx.opts);
        rep_parts.push_back(verify_path_slice(
            product, ctx.omega,
            {ctx.stem_paths.begin(), ctx.stem_paths.begin() + paths}, ctx.units,
            tol));
        for (std::size_t t = 0; t < paths; ++t) {
            const ComplexPath& gamma = ctx.stem_paths[t];
            StemValue extracted, closed;
            try {
                extracted = sub_stem(product, gamma, ctx.units, ctx.opts);
                closed = product.stem(gamma);
            } catch (const InsufficientUnits&) {
                continue;
            } catch (const IllConditionedPair&) {
                continue;
            }
            const double residual = std::max(abs(extracted.F1 - closed.F1),
                                             abs(extracted.F2 - closed.F2));
            max_residual = std::max(max_residual, residual);
            if (residual > tol) {
                json w;
                w["kind"] = "product-stem-mismatch";
                w["left"] = f.name();
                w["right"] = g.name();
                w["path"] = gamma;
                w["residual"] = residual;
                report.add_witness(std::move(w));
            }
        }
    }
    for (const CheckReport& part : rep_parts) {
        if (!part.passed()) {
            report.verdict = Verdict::violation_found;
            for (const json& w : part.witnesses) report.witnesses.push_back(w);
        }
        max_residual = std::max(max_residual,
                                part.resolution["max_residual"].get<double>());
    }
    report.resolution = json{{"check", "pr-star-product"},
                             {"products", rep_parts.size()},
                             {"paths", paths},
                             {"tol", tol},
                             {"max_residual", max_residual}};
    return report;
}

CheckReport check_unique_function(SuiteContext& ctx) {
    const double tol = tolerance(ctx.scenario, "uniqueness", 1e-10);
    CheckReport report;
    double max_residual = 0.0;
    Rng rng(ctx.scenario.seed * 0x9e3779b97f4a7c15ULL + 8);
    const std::vector<SlicePoint> probes =
        random_points(rng, ctx.omega, ctx.units, 50, false);
    const PathSliceFn& f = ctx.star_pool.front();
    const auto units = ctx.units;
    const auto opts = ctx.opts;
    const PathSliceFn g = PathSliceFn::stem_backed(
        "stem-closure-of-" + f.name(), ctx.omega,
        [f, units, opts](const ComplexPath& gamma) {
            return sub_stem(f, gamma, units, opts);
        },
        ctx.opts);
    for (const SlicePoint& q : probes) {
        const double residual = abs(g.eval(q) - f.eval(q));
        max_residual = std::max(max_residual, residual);
        if (residual > tol) {
            json w;
            w["kind"] = "shared-stem-distinct-values";
            w["point"] = q;
            w["residual"] = residual;
            report.add_witness(std::move(w));
        }
    }
    for (const SlicePoint& q :
         random_points(rng, ctx.omega, ctx.units, 10, true)) {
        const double residual = abs(g.eval(q) - f.eval(q));
        max_residual = std::max(max_residual, residual);
        if (residual > tol) {
            json w;
            w["kind"] = "shared-stem-distinct-values";
            w["point"] = q;
            w["residual"] = residual;
            report.add_witness(std::move(w));
        }
    }
    report.resolution = json{{"check", "pr-spsfeq"},
                             {"probes", probes.size() + 10},
                             {"tol", tol},
                             {"max_residual", max_residual}};
    return report;
}

CheckReport check_cr_residual(SuiteContext& ctx) {
    const double tol = tolerance(ctx.scenario, "cr", 1e-8);
    const double h = ctx.scenario.tolerances.value("cr_h", 1e-3);
    Rng rng(ctx.scenario.seed * 0x9e3779b97f4a7c15ULL + 9);
    const StarHypothesis hyp = ctx.attestation();
    const Quaternion a = random_quaternion(rng);
    const Quaternion b = random_quaternion(rng);
    // stencil-exact material: the truncation term of the central difference
    // carries the third derivative, so products stay at degree <= 2 here
    const PathSliceFn quad = make_polynomial(
        {random_quaternion(rng), random_quaternion(rng), random_quaternion(rng)},
        ctx.omega, "quad");
    std::vector<std::pair<PathSliceFn, PathSliceFn>> combos;
    combos.emplace_back(make_identity(ctx.omega), make_identity(ctx.omega));
    combos.emplace_back(make_polynomial({Quaternion{}, a}, ctx.omega, "qa"),
                        make_polynomial({Quaternion{}, b}, ctx.omega, "qb"));
    combos.emplace_back(make_constant(a, ctx.omega), quad);

    CheckReport report;
    double max_residual = 0.0;
    for (const auto& [f, g] : combos) {
        const PathSliceFn product =
            fn_star(f, g, ctx.omega, ctx.omega, hyp, ctx.units, ctx.opts);
        const CRReport cr =
            cr_residual(product, ctx.omega, ctx.cr_units, 17, h, false);
        max_residual = std::max(max_residual, cr.max_residual);
        if (cr.max_residual > tol) {
            json w;
            w["kind"] = "cr-residual";
            w["function"] = product.name();
            w["max_residual"] = cr.max_residual;
            report.add_witness(std::move(w));
        }
    }
    report.resolution = json{{"check", "cr-residual"},
                             {"h", h},
                             {"units", ctx.cr_units.size()},
                             {"tol", tol},
                             {"max_residual", max_residual}};
    return report;
}

CheckReport check_cr_order(SuiteContext& ctx) {
    const double lo = tolerance(ctx.scenario, "cr_ratio_lo", 3.5);
    const double hi = tolerance(ctx.scenario, "cr_ratio_hi", 4.5);
    const double h = ctx.scenario.tolerances.value("cr_h", 1e-3);
    const PathSliceFn smooth = make_exp_series(ctx.omega);
    const CRReport cr = cr_residual(smooth, ctx.omega, ctx.cr_units, 17, h, true);
    const double ratio = cr.max_residual / cr.max_residual_half;
    CheckReport report;
    if (!(ratio >= lo && ratio <= hi)) {
        json w;
        w["kind"] = "cr-order";
        w["ratio"] = ratio;
        w["max_residual"] = cr.max_residual;
        w["max_residual_half"] = cr.max_residual_half;
        report.add_witness(std::move(w));
    }
    report.resolution = json{{"check", "cr-order"},
                             {"h", h},
                             {"ratio", ratio},
                             {"ratio_window", json::array({lo, hi})},
                             {"order_estimate", cr.order_estimate},
                             {"max_residual", cr.max_residual}};
    return report;
}

const std::map<std::string, CheckFn>& registry() {
    static const std::map<std::string, CheckFn> checks = {
        {"eq-fcg", check_eq_fcg},
        {"eq-almost-stem-2091", check_pair_independence},
        {"eq-fgamma-conj",
         [](SuiteContext& c) { return symmetry_outcome(c, "eq-fgamma-conj"); }},
        {"eq-fgamma-R",
         [](SuiteContext& c) { return symmetry_outcome(c, "eq-fgamma-R"); }},
        {"eq-lfo1", [](SuiteContext& c) { return symmetry_outcome(c, "eq-lfo1"); }},
        {"eq-stemcoincide", check_stem_coincide},
        {"eq-mpmn", check_containment},
        {"eq-overline", check_overline},
        {"eq-llfg", check_real_restriction},
        {"star-oracle", check_star_oracle},
        {"eq-associative",
         [](SuiteContext& c) { return check_algebra(c, true); }},
        {"thm-algebra", [](SuiteContext& c) { return check_algebra(c, false); }},
        {"pr-star-product", check_star_closure},
        {"pr-spsfeq", check_unique_function},
        {"real-path-connected",
         [](SuiteContext& c) {
             return check_real_path_connected(
                 c.omega, c.corpus.probes,
                 PathfinderOptions{c.scenario.grid_h, c.scenario.max_step});
         }},
        {"stem-preserving",
         [](SuiteContext& c) {
             return check_stem_preserving(c.omega, c.omega, c.corpus.paths,
                                          c.corpus.pairs, c.domain_units);
         }},
        {"self-stem-preserving",
         [](SuiteContext& c) { return c.self_report(); }},
        {"weakly-axially-symmetric",
         [](SuiteContext& c) {
             return check_weakly_axially_symmetric(c.omega, c.corpus.probes);
         }},
        {"cr-residual", check_cr_residual},
        {"cr-order", check_cr_order},
    };
    return checks;
}

}  // namespace

const std::vector<std::string>& known_checks() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : registry()) out.push_back(name);
        return out;
    }();
    return names;
}

Scenario bundled_scenario(const std::string& name) {
    Scenario s;
    s.name = name;
    if (name == "ball-polynomials") {
        s.domain_spec = json{{"name", "euclidean_ball"},
                             {"params", {{"center", {0.0}}, {"radius", 1.0}}}};
        s.checks = known_checks();
        for (const std::string& c : s.checks) s.expected[c] = "no-violation-found";
        return s;
    }
    if (name == "nonaxisym-union") {
        s.domain_spec = json{{"name", "nonaxisym_union"}, {"params", json::object()}};
        // lens paths admit only a narrow cap of units around i; a denser
        // sample keeps a well-conditioned extraction pair inside the cap
        s.units = 200;
        s.checks = {"real-path-connected", "self-stem-preserving", "eq-fcg",
                    "eq-fgamma-conj", "eq-fgamma-R", "eq-stemcoincide"};
        for (const std::string& c : s.checks) s.expected[c] = "no-violation-found";
        return s;
    }
    if (name == "single-slice-tube") {
        const ComplexPath base = make_segment({{0.2, 0.0}}, {{1.0, 2.0}});
        json params;
        params["base"] = base;
        params["unit"] = unit_i();
        params["thickness"] = 0.1;
        s.domain_spec = json{{"name", "slice_tube"}, {"params", params}};
        s.checks = {"real-path-connected", "stem-preserving",
                    "weakly-axially-symmetric"};
        s.expected["real-path-connected"] = "no-violation-found";
        s.expected["stem-preserving"] = "violation-found";
        s.expected["weakly-axially-symmetric"] = "violation-found";
        return s;
    }
    throw UnknownDomain("unknown bundled scenario: " + name);
}

Scenario scenario_from_json(const json& j) {
    Scenario s = j.contains("base") ? bundled_scenario(j.at("base").get<std::string>())
                                    : Scenario{};
    if (j.contains("name")) s.name = j.at("name").get<std::string>();
    if (j.contains("seed")) s.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("units")) s.units = j.at("units").get<int>();
    if (j.contains("domain_units")) s.domain_units = j.at("domain_units").get<int>();
    if (j.contains("max_step")) s.max_step = j.at("max_step").get<double>();
    if (j.contains("grid_h")) s.grid_h = j.at("grid_h").get<double>();
    if (j.contains("domain")) s.domain_spec = j.at("domain");
    if (j.contains("functions")) s.functions = j.at("functions");
    if (j.contains("tolerances")) s.tolerances = j.at("tolerances");
    if (j.contains("checks")) s.checks = j.at("checks").get<std::vector<std::string>>();
    if (j.contains("expected")) s.expected = j.at("expected");
    if (s.domain_spec.is_null() || s.domain_spec.empty()) {
        throw Error("scenario: missing domain specification");
    }
    if (s.checks.empty()) {
        throw Error("scenario: no checks selected");
    }
    if (s.units < 2 || s.domain_units < 2) {
        throw Error("scenario: unit sample sizes must be at least 2");
    }
    for (const auto& [key, value] : s.tolerances.items()) {
        if (!value.is_number() || value.get<double>() <= 0.0) {
            throw Error("scenario: tolerance '" + key + "' must be positive");
        }
    }
    return s;
}

json scenario_to_json(const Scenario& s) {
    json j;
    j["name"] = s.name;
    j["seed"] = s.seed;
    j["units"] = s.units;
    j["domain_units"] = s.domain_units;
    j["max_step"] = s.max_step;
    j["grid_h"] = s.grid_h;
    j["domain"] = s.domain_spec;
    j["functions"] = s.functions;
    j["tolerances"] = s.tolerances;
    j["checks"] = s.checks;
    j["expected"] = s.expected;
    return j;
}

SuiteResult run_suite(const Scenario& scenario) {
    const auto t0 = std::chrono::steady_clock::now();
    SuiteContext ctx(scenario);
    SuiteResult result;
    json checks = json::object();
    std::size_t violations = 0;

    for (const std::string& name : scenario.checks) {
        const auto it = registry().find(name);
        if (it == registry().end()) {
            throw Error("unknown check: " + name);
        }
        const CheckReport report = it->second(ctx);
        json entry;
        entry["verdict"] = to_string(report.verdict);
        entry["resolution"] = report.resolution;
        entry["witness_count"] = report.witnesses.size();
        json capped = json::array();
        for (std::size_t w = 0; w < std::min<std::size_t>(3, report.witnesses.size());
             ++w) {
            capped.push_back(report.witnesses[w]);
        }
        entry["witnesses"] = std::move(capped);
        if (scenario.expected.contains(name)) {
            entry["expected"] = scenario.expected.at(name);
            if (scenario.expected.at(name).get<std::string>() !=
                to_string(report.verdict)) {
                ++result.expected_mismatches;
            }
        }
        if (!report.passed()) ++violations;
        checks[name] = std::move(entry);
    }

    result.any_violation = violations > 0;
    result.report = json::object();
    result.report["scenario"] = scenario.name;
    result.report["seed"] = scenario.seed;
    result.report["resolution"] =
        json{{"units", scenario.units},
             {"domain_units", scenario.domain_units},
             {"max_step", scenario.max_step},
             {"grid_h", scenario.grid_h},
             {"probes", ctx.corpus.probes.size()},
             {"paths", ctx.corpus.paths.size()},
             {"pairs", ctx.corpus.pairs.size()}};
    result.report["checks"] = std::move(checks);
    result.report["summary"] =
        json{{"checks_run", scenario.checks.size()},
             {"violations", violations},
             {"expected_mismatches", result.expected_mismatches}};
    result.report["wall_time_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - t0)
            .count();
    return result;
}

}  // namespace slicestar
