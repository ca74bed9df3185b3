#include "slicestar/domain.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>
#include <unordered_map>

#include "slicestar/errors.hpp"
#include "slicestar/json_io.hpp"

namespace slicestar {

struct Domain::Impl {
    std::string name;
    json params;
    std::size_t n = 1;
    Predicate contains;
    PlaneBox bounds;
    std::vector<UnitImaginary> probe_units;
};

Domain::Domain(std::string name, json params, std::size_t n, Predicate contains,
               PlaneBox bounds, std::vector<UnitImaginary> probe_units) {
    auto impl = std::make_shared<Impl>();
    impl->name = std::move(name);
    impl->params = std::move(params);
    impl->n = n;
    impl->contains = std::move(contains);
    impl->bounds = std::move(bounds);
    impl->probe_units = std::move(probe_units);
    impl_ = std::move(impl);
}

std::size_t Domain::dim() const { return impl_->n; }
bool Domain::contains(const SlicePoint& q) const { return impl_->contains(q); }
const std::string& Domain::name() const { return impl_->name; }
const json& Domain::params() const { return impl_->params; }
const PlaneBox& Domain::bounds() const { return impl_->bounds; }
const std::vector<UnitImaginary>& Domain::probe_units() const {
    return impl_->probe_units;
}

namespace {

std::vector<UnitImaginary> canonical_six() {
    return {unit_i(), -unit_i(), unit_j(), -unit_j(), unit_k(), -unit_k()};
}

PlaneBox ball_box(const SlicePoint& center, double radius) {
    PlaneBox box;
    for (std::size_t l = 0; l < center.dim(); ++l) {
        box.x_lo.push_back(center.x()[l] - radius);
        box.x_hi.push_back(center.x()[l] + radius);
        box.y_abs.push_back(std::fabs(center.y()[l]) + radius);
    }
    return box;
}

}  // namespace

Domain make_euclidean_ball(const SlicePoint& center, double radius) {
    json params;
    params["center"] = center;
    params["radius"] = radius;
    auto contains = [center, radius](const SlicePoint& q) {
        return q.dim() == center.dim() && distance(q, center) < radius;
    };
    return Domain("euclidean_ball", std::move(params), center.dim(),
                  std::move(contains), ball_box(center, radius), canonical_six());
}

Domain make_euclidean_ball(const std::vector<double>& center, double radius) {
    return make_euclidean_ball(SlicePoint::real(center), radius);
}

Domain make_nonaxisym_union() {
    const Domain ball = make_euclidean_ball(SlicePoint::real({0.0}), 1.1);
    const SlicePoint lens_center = SlicePoint::make({1.0}, {1.0}, unit_i());
    const Domain lens = make_euclidean_ball(lens_center, 0.5);
    auto contains = [ball, lens](const SlicePoint& q) {
        return ball.contains(q) || lens.contains(q);
    };
    PlaneBox box{{-1.6}, {1.6}, {1.6}};
    return Domain("nonaxisym_union", json::object(), 1, std::move(contains),
                  std::move(box), canonical_six());
}

Domain make_slice_tube(const ComplexPath& base, const UnitImaginary& unit,
                       double thickness) {
    if (thickness <= 0.0) {
        throw std::invalid_argument("slice_tube: thickness must be positive");
    }
    std::vector<std::vector<double>> spine;
    for (const SlicePoint& p : lift(base, unit)) spine.push_back(to_r4(p));

    auto contains = [spine, dim = base.dim(), thickness](const SlicePoint& q) {
        if (q.dim() != dim) return false;
        const std::vector<double> v = to_r4(q);
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k + 1 < spine.size(); ++k) {
            const std::vector<double>& a = spine[k];
            const std::vector<double>& b = spine[k + 1];
            double ab2 = 0.0, av_ab = 0.0;
            for (std::size_t c = 0; c < v.size(); ++c) {
                const double d = b[c] - a[c];
                ab2 += d * d;
                av_ab += (v[c] - a[c]) * d;
            }
            const double t = ab2 > 0.0 ? std::clamp(av_ab / ab2, 0.0, 1.0) : 0.0;
            double d2 = 0.0;
            for (std::size_t c = 0; c < v.size(); ++c) {
                const double d = v[c] - (a[c] + t * (b[c] - a[c]));
                d2 += d * d;
            }
            best = std::min(best, d2);
        }
        return best < thickness * thickness;
    };

    PlaneBox box;
    for (std::size_t l = 0; l < base.dim(); ++l) {
        double xlo = std::numeric_limits<double>::infinity(), xhi = -xlo, ya = 0.0;
        for (const ComplexPoint& z : base.samples) {
            xlo = std::min(xlo, z[l].real());
            xhi = std::max(xhi, z[l].real());
            ya = std::max(ya, std::fabs(z[l].imag()));
        }
        box.x_lo.push_back(xlo - thickness);
        box.x_hi.push_back(xhi + thickness);
        box.y_abs.push_back(ya + thickness);
    }

    json params;
    params["base"] = base;
    params["unit"] = unit;
    params["thickness"] = thickness;
    return Domain("slice_tube", std::move(params), base.dim(), std::move(contains),
                  std::move(box), {unit, -unit});
}

Domain make_halfspace(double c, std::size_t n) {
    auto contains = [c](const SlicePoint& q) { return q.x()[0] < c; };
    PlaneBox box;
    for (std::size_t l = 0; l < n; ++l) {
        box.x_lo.push_back(c - 3.0);
        box.x_hi.push_back(c);
        box.y_abs.push_back(1.5);
    }
    json params;
    params["c"] = c;
    params["n"] = n;
    return Domain("halfspace", std::move(params), n, std::move(contains),
                  std::move(box), canonical_six());
}

Domain make_domain(const std::string& name, const json& params) {
    if (name == "euclidean_ball") {
        const double radius = params.at("radius").get<double>();
        const json& c = params.at("center");
        if (c.is_array()) {
            return make_euclidean_ball(c.get<std::vector<double>>(), radius);
        }
        return make_euclidean_ball(c.get<SlicePoint>(), radius);
    }
    if (name == "nonaxisym_union") {
        return make_nonaxisym_union();
    }
    if (name == "slice_tube") {
        return make_slice_tube(params.at("base").get<ComplexPath>(),
                               params.at("unit").get<UnitImaginary>(),
                               params.at("thickness").get<double>());
    }
    if (name == "halfspace") {
        return make_halfspace(params.at("c").get<double>(),
                              params.value("n", std::size_t{1}));
    }
    throw UnknownDomain("unknown domain constructor: " + name);
}

std::vector<UnitImaginary> slice_units(const Domain& domain,
                                       const ComplexPath& path,
                                       const std::vector<UnitImaginary>& units) {
    std::vector<UnitImaginary> out;
    for (const UnitImaginary& u : units) {
        bool inside = true;
        for (const ComplexPoint& z : path.samples) {
            if (!domain.contains(embed(z, u))) {
                inside = false;
                break;
            }
        }
        if (inside) out.push_back(u);
    }
    return out;
}

PathPair make_path_pair(ComplexPath alpha, ComplexPath beta) {
    if (euclid_distance(endpoint(alpha), endpoint(beta)) > 1e-12) {
        throw std::invalid_argument("path pair must share its endpoint");
    }
    return PathPair{std::move(alpha), std::move(beta)};
}

namespace {

bool lift_inside(const Domain& domain, const ComplexPath& path,
                 const UnitImaginary& unit, double max_step) {
    const ComplexPath fine = refine(path, max_step);
    for (const ComplexPoint& z : fine.samples) {
        if (!domain.contains(embed(z, unit))) return false;
    }
    return true;
}

bool real_path_inside(const Domain& domain, const ComplexPath& path,
                      double max_step) {
    const ComplexPath fine = refine(path, max_step);
    for (const ComplexPoint& z : fine.samples) {
        std::vector<double> x(z.size());
        for (std::size_t l = 0; l < z.size(); ++l) x[l] = z[l].real();
        if (!domain.contains(SlicePoint::real(std::move(x)))) return false;
    }
    return true;
}

// Grid BFS in the plane coordinates of one slice: axes are x_1..x_n followed
// by y_1..y_n (y signed; the negative half is the conjugate unit).
struct GridIndex {
    std::array<int, 4> v{0, 0, 0, 0};
    bool operator==(const GridIndex&) const = default;
};

struct GridIndexHash {
    std::size_t operator()(const GridIndex& g) const {
        std::size_t h = 0;
        for (int c : g.v) h = h * 1000003u + static_cast<std::size_t>(c + 32768);
        return h;
    }
};

struct SliceGrid {
    const Domain* domain;
    UnitImaginary unit;
    std::size_t n;
    double h;
    PlaneBox box;
    std::array<int, 4> lo{}, hi{};  // inclusive index bounds per axis

    SliceGrid(const Domain& d, const UnitImaginary& u, double step)
        : domain(&d), unit(u), n(d.dim()), h(step), box(d.bounds()) {
        for (std::size_t l = 0; l < n; ++l) {
            lo[l] = 0;
            hi[l] = static_cast<int>(std::floor((box.x_hi[l] - box.x_lo[l]) / h));
            lo[n + l] = static_cast<int>(std::floor(-box.y_abs[l] / h));
            hi[n + l] = static_cast<int>(std::floor(box.y_abs[l] / h));
        }
    }

    double axis_value(std::size_t axis, int idx) const {
        if (axis < n) return box.x_lo[axis] + (idx + 0.5) * h;
        return (idx + 0.5) * h;  // y axes are centered on zero
    }

    ComplexPoint plane_point(const GridIndex& g) const {
        ComplexPoint z(n);
        for (std::size_t l = 0; l < n; ++l) {
            z[l] = {axis_value(l, g.v[l]), axis_value(n + l, g.v[n + l])};
        }
        return z;
    }

    bool member(const GridIndex& g) const {
        for (std::size_t a = 0; a < 2 * n; ++a) {
            if (g.v[a] < lo[a] || g.v[a] > hi[a]) return false;
        }
        return domain->contains(embed(plane_point(g), unit));
    }

    GridIndex nearest_cell(const ComplexPoint& z) const {
        GridIndex g;
        for (std::size_t l = 0; l < n; ++l) {
            g.v[l] = static_cast<int>(std::floor((z[l].real() - box.x_lo[l]) / h));
            g.v[n + l] = static_cast<int>(std::floor(z[l].imag() / h));
            g.v[l] = std::clamp(g.v[l], lo[l], hi[l]);
            g.v[n + l] = std::clamp(g.v[n + l], lo[n + l], hi[n + l]);
        }
        return g;
    }

    // A cell touching the real locus whose real projection is a member.
    bool real_goal(const GridIndex& g, ComplexPoint* real_point) const {
        std::vector<double> x(n);
        for (std::size_t l = 0; l < n; ++l) {
            if (std::abs(axis_value(n + l, g.v[n + l])) > h) return false;
            x[l] = axis_value(l, g.v[l]);
        }
        if (!domain->contains(SlicePoint::real(x))) return false;
        if (real_point) {
            real_point->assign(n, {0.0, 0.0});
            for (std::size_t l = 0; l < n; ++l) (*real_point)[l] = {x[l], 0.0};
        }
        return true;
    }
};

std::optional<ComplexPath> grid_bfs_path(const Domain& domain,
                                         const SlicePoint& target, double grid_h,
                                         double max_step) {
    if (domain.dim() > 2 || target.is_real()) return std::nullopt;
    const UnitImaginary unit = *target.unit();
    const SliceGrid grid(domain, unit, grid_h);
    const ComplexPoint target_plane = plane_coordinates(target);

    GridIndex start = grid.nearest_cell(target_plane);
    if (!grid.member(start)) {
        bool found = false;
        // scan the 3^(2n) block around the nominal cell
        const std::size_t axes = 2 * domain.dim();
        std::array<int, 4> off{0, 0, 0, 0};
        std::function<void(std::size_t)> scan = [&](std::size_t a) {
            if (found) return;
            if (a == axes) {
                GridIndex g = start;
                for (std::size_t c = 0; c < axes; ++c) g.v[c] += off[c];
                if (grid.member(g)) {
                    start = g;
                    found = true;
                }
                return;
            }
            for (int d : {0, -1, 1}) {
                off[a] = d;
                scan(a + 1);
                if (found) return;
            }
            off[a] = 0;
        };
        scan(0);
        if (!found) return std::nullopt;
    }

    std::unordered_map<GridIndex, GridIndex, GridIndexHash> parent;
    parent.emplace(start, start);
    std::deque<GridIndex> queue{start};
    std::optional<GridIndex> goal;
    ComplexPoint real_start;
    while (!queue.empty() && !goal) {
        const GridIndex cur = queue.front();
        queue.pop_front();
        if (grid.real_goal(cur, &real_start)) {
            goal = cur;
            break;
        }
        for (std::size_t a = 0; a < 2 * domain.dim(); ++a) {
            for (int d : {-1, 1}) {
                GridIndex nb = cur;
                nb.v[a] += d;
                if (parent.contains(nb) || !grid.member(nb)) continue;
                parent.emplace(nb, cur);
                queue.push_back(nb);
            }
        }
    }
    if (!goal) return std::nullopt;

    std::vector<ComplexPoint> cells;
    for (GridIndex g = *goal;; g = parent.at(g)) {
        cells.push_back(grid.plane_point(g));
        if (parent.at(g) == g) break;
    }
    std::vector<ComplexPoint> samples;
    samples.push_back(real_start);
    samples.insert(samples.end(), cells.begin(), cells.end());
    samples.push_back(target_plane);
    ComplexPath path = refine(make_path(std::move(samples)), max_step);
    if (!lift_inside(domain, path, unit, max_step)) return std::nullopt;
    return path;
}

}  // namespace

std::optional<ComplexPath> find_real_path(const Domain& domain,
                                          const SlicePoint& target,
                                          const PathfinderOptions& opts) {
    if (!domain.contains(target)) return std::nullopt;
    if (target.is_real()) {
        const ComplexPoint at = plane_coordinates(target);
        return ComplexPath{{at, at}};
    }
    ComplexPath straight = refine(straight_path_to(target), opts.max_step);
    if (lift_inside(domain, straight, *target.unit(), opts.max_step)) {
        return straight;
    }
    const ComplexPoint target_plane = plane_coordinates(target);
    for (const ComplexPath& candidate : opts.candidates) {
        if (candidate.dim() != domain.dim() ||
            euclid_distance(endpoint(candidate), target_plane) > 1e-12) {
            continue;
        }
        ComplexPath fine = refine(candidate, opts.max_step);
        if (lift_inside(domain, fine, *target.unit(), opts.max_step)) {
            return fine;
        }
    }
    if (auto path = grid_bfs_path(domain, target, opts.grid_h, opts.max_step)) {
        return path;
    }
    return grid_bfs_path(domain, target, opts.grid_h / 2.0, opts.max_step);
}

namespace {

// Real grid members of the domain's real trace, in axis order.
std::vector<std::vector<double>> real_trace_points(const Domain& domain,
                                                   double step) {
    const PlaneBox& box = domain.bounds();
    const std::size_t n = domain.dim();
    std::vector<std::vector<double>> out;
    std::vector<double> x(n);
    std::function<void(std::size_t)> walk = [&](std::size_t l) {
        if (l == n) {
            if (domain.contains(SlicePoint::real(x))) out.push_back(x);
            return;
        }
        for (double v = box.x_lo[l] + step / 2; v <= box.x_hi[l]; v += step) {
            x[l] = v;
            walk(l + 1);
        }
    };
    walk(0);
    return out;
}

}  // namespace

CheckReport check_real_path_connected(const Domain& domain,
                                      const std::vector<SlicePoint>& probes,
                                      const PathfinderOptions& opts) {
    CheckReport report;
    bool any_nonreal = false;
    for (const SlicePoint& q : probes) {
        if (!q.is_real()) any_nonreal = true;
    }
    if (any_nonreal && real_trace_points(domain, opts.grid_h).empty()) {
        throw EmptyRealTrace("real trace of " + domain.name() +
                             " is empty at grid resolution");
    }

    std::size_t skipped_outside = 0, straight_paths = 0, near_real_count = 0;
    json found = json::array();
    for (const SlicePoint& q : probes) {
        if (!domain.contains(q)) {
            ++skipped_outside;
            continue;
        }
        if (near_real(q)) ++near_real_count;
        if (q.is_real()) {
            ++straight_paths;
            continue;
        }
        const ComplexPath straight = refine(straight_path_to(q), opts.max_step);
        if (lift_inside(domain, straight, *q.unit(), opts.max_step)) {
            ++straight_paths;
            continue;
        }
        auto path = grid_bfs_path(domain, q, opts.grid_h, opts.max_step);
        if (!path) path = grid_bfs_path(domain, q, opts.grid_h / 2.0, opts.max_step);
        if (path) {
            json item;
            item["probe"] = q;
            item["path"] = *path;
            found.push_back(std::move(item));
        } else {
            json w;
            w["kind"] = "unreachable-point";
            w["point"] = q;
            report.add_witness(std::move(w));
        }
    }
    report.resolution["check"] = "real-path-connected";
    report.resolution["grid_h"] = opts.grid_h;
    report.resolution["max_step"] = opts.max_step;
    report.resolution["probes"] = probes.size();
    report.resolution["skipped_outside_domain"] = skipped_outside;
    report.resolution["straight_paths"] = straight_paths;
    report.resolution["near_real_probes"] = near_real_count;
    report.resolution["found_paths"] = std::move(found);
    return report;
}

CheckReport check_stem_preserving(const Domain& omega1, const Domain& omega2,
                                  const std::vector<ComplexPath>& paths,
                                  const std::vector<PathPair>& pairs,
                                  const std::vector<UnitImaginary>& units) {
    CheckReport report;
    std::size_t skipped_not_in_omega1 = 0;
    std::size_t containment_ok = 0;
    for (const ComplexPath& gamma : paths) {
        if (slice_units(omega1, gamma, units).empty()) {
            ++skipped_not_in_omega1;  // not a member of the path class at resolution
            continue;
        }
        const std::vector<UnitImaginary> admissible = slice_units(omega2, gamma, units);
        if (!admissible.empty()) ++containment_ok;
        if (admissible.size() <= 1) {
            json w;
            w["kind"] = "too-few-units";
            w["path"] = gamma;
            w["admissible_units"] = admissible;
            report.add_witness(std::move(w));
        }
    }
    std::size_t skipped_pairs = 0;
    for (const PathPair& pair : pairs) {
        if (slice_units(omega1, pair.alpha, units).empty() ||
            slice_units(omega1, pair.beta, units).empty()) {
            ++skipped_pairs;
            continue;
        }
        const auto ua = slice_units(omega2, pair.alpha, units);
        const auto ub = slice_units(omega2, pair.beta, units);
        std::vector<UnitImaginary> shared;
        for (const UnitImaginary& u : ua) {
            for (const UnitImaginary& v : ub) {
                if (distance(u, v) < 1e-12) {
                    shared.push_back(u);
                    break;
                }
            }
        }
        if (shared.size() == 1) {
            json w;
            w["kind"] = "single-shared-unit";
            w["alpha"] = pair.alpha;
            w["beta"] = pair.beta;
            w["shared_unit"] = shared.front();
            report.add_witness(std::move(w));
        }
    }
    report.resolution["check"] = "stem-preserving";
    report.resolution["units"] = units.size();
    report.resolution["paths"] = paths.size();
    report.resolution["pairs"] = pairs.size();
    report.resolution["skipped_paths_outside_omega1"] = skipped_not_in_omega1;
    report.resolution["skipped_pairs_outside_omega1"] = skipped_pairs;
    report.resolution["paths_also_in_omega2"] = containment_ok;
    return report;
}

CheckReport check_self_stem_preserving(const Domain& domain, const Corpus& corpus,
                                       const std::vector<UnitImaginary>& units,
                                       const PathfinderOptions& opts) {
    CheckReport rpc = check_real_path_connected(domain, corpus.probes, opts);
    CheckReport sp =
        check_stem_preserving(domain, domain, corpus.paths, corpus.pairs, units);
    CheckReport report;
    report.verdict = (rpc.passed() && sp.passed()) ? Verdict::no_violation_found
                                                   : Verdict::violation_found;
    for (const json& w : rpc.witnesses) report.witnesses.push_back(w);
    for (const json& w : sp.witnesses) report.witnesses.push_back(w);
    report.resolution["check"] = "self-stem-preserving";
    rpc.resolution.erase("found_paths");
    report.resolution["real_path_connected"] = rpc.resolution;
    report.resolution["stem_preserving"] = sp.resolution;
    return report;
}

CheckReport check_weakly_axially_symmetric(const Domain& domain,
                                           const std::vector<SlicePoint>& probes) {
    CheckReport report;
    std::size_t skipped = 0;
    for (const SlicePoint& q : probes) {
        if (!domain.contains(q)) {
            ++skipped;
            continue;
        }
        const SlicePoint qc = conj_point(q);
        if (!domain.contains(qc)) {
            json w;
            w["kind"] = "conjugate-escapes";
            w["point"] = q;
            w["conjugate"] = qc;
            report.add_witness(std::move(w));
        }
    }
    report.resolution["check"] = "weakly-axially-symmetric";
    report.resolution["probes"] = probes.size();
    report.resolution["skipped_outside_domain"] = skipped;
    return report;
}

Corpus build_corpus(const Domain& domain, const CorpusOptions& opts) {
    Corpus corpus;
    const PlaneBox& box = domain.bounds();
    const std::size_t n = domain.dim();

    const std::vector<std::vector<double>> real_members =
        real_trace_points(domain, opts.probe_grid_h);

    // Probes: real trace plus positive-y plane grids of the declared units.
    for (const std::vector<double>& x : real_members) {
        corpus.probes.push_back(SlicePoint::real(x));
    }
    for (const UnitImaginary& u : domain.probe_units()) {
        std::vector<double> x(n), y(n);
        std::function<void(std::size_t)> walk = [&](std::size_t axis) {
            if (axis == 2 * n) {
                bool nontrivial = false;
                for (std::size_t l = 0; l < n; ++l) {
                    if (y[l] != 0.0) nontrivial = true;
                }
                if (!nontrivial) return;
                SlicePoint p = SlicePoint::make(x, y, u);
                if (domain.contains(p)) corpus.probes.push_back(std::move(p));
                return;
            }
            if (axis < n) {
                for (double v = box.x_lo[axis] + opts.probe_grid_h / 2;
                     v <= box.x_hi[axis]; v += opts.probe_grid_h) {
                    x[axis] = v;
                    walk(axis + 1);
                }
            } else {
                const std::size_t l = axis - n;
                // canonical representatives only: y >= 0, negated units cover
                // the mirror half of each plane
                for (double v = 0.0; v <= box.y_abs[l]; v += opts.probe_grid_h) {
                    y[l] = v;
                    walk(axis + 1);
                }
            }
        };
        walk(0);
    }
    if (corpus.probes.size() > opts.max_probes) {
        const std::size_t stride =
            (corpus.probes.size() + opts.max_probes - 1) / opts.max_probes;
        std::vector<SlicePoint> kept;
        for (std::size_t i = 0; i < corpus.probes.size(); i += stride) {
            kept.push_back(corpus.probes[i]);
        }
        corpus.probes = std::move(kept);
    }

    const PathfinderOptions pf{opts.bfs_grid_h, opts.max_step};

    // Real-endpoint paths first so real degenerations are always exercised.
    std::size_t real_paths = 0;
    if (!real_members.empty()) {
        const std::vector<double>& anchor = real_members.front();
        for (const std::vector<double>& x : real_members) {
            if (real_paths >= opts.min_real_endpoint_paths) break;
            ComplexPoint a(n), b(n);
            for (std::size_t l = 0; l < n; ++l) {
                a[l] = {anchor[l], 0.0};
                b[l] = {x[l], 0.0};
            }
            ComplexPath seg = refine(make_segment(a, b), opts.max_step);
            if (real_path_inside(domain, seg, opts.max_step)) {
                corpus.paths.push_back(seg);
                ++real_paths;
            }
        }
    }

    for (const SlicePoint& q : corpus.probes) {
        if (q.is_real()) continue;
        if (auto path = find_real_path(domain, q, pf)) {
            corpus.paths.push_back(std::move(*path));
        }
    }

    // Pairs: straight-or-found path vs an L-shaped route from another real
    // start; plus two real segments meeting at a real probe.
    const std::size_t pair_budget = 48;
    for (const SlicePoint& q : corpus.probes) {
        if (corpus.pairs.size() >= pair_budget) break;
        if (q.is_real()) {
            if (real_members.size() < 2) continue;
            ComplexPoint a(n), b(n), e(n);
            for (std::size_t l = 0; l < n; ++l) {
                a[l] = {real_members.front()[l], 0.0};
                b[l] = {real_members.back()[l], 0.0};
                e[l] = {q.x()[l], 0.0};
            }
            ComplexPath alpha = refine(make_segment(a, e), opts.max_step);
            ComplexPath beta = refine(make_segment(b, e), opts.max_step);
            if (real_path_inside(domain, alpha, opts.max_step) &&
                real_path_inside(domain, beta, opts.max_step)) {
                corpus.pairs.push_back(make_path_pair(std::move(alpha), std::move(beta)));
            }
            continue;
        }
        auto alpha = find_real_path(domain, q, pf);
        if (!alpha) continue;
        for (const std::vector<double>& start : real_members) {
            bool distinct = false;
            for (std::size_t l = 0; l < n; ++l) {
                if (std::fabs(start[l] - q.x()[l]) > opts.probe_grid_h / 2) {
                    distinct = true;
                }
            }
            if (!distinct) continue;
            ComplexPoint a(n), corner(n), e(n);
            for (std::size_t l = 0; l < n; ++l) {
                a[l] = {start[l], 0.0};
                corner[l] = {q.x()[l], 0.0};
                e[l] = {q.x()[l], q.y()[l]};
            }
            ComplexPath beta = refine(make_polyline({a, corner, e}), opts.max_step);
            if (lift_inside(domain, beta, *q.unit(), opts.max_step)) {
                corpus.pairs.push_back(make_path_pair(*alpha, std::move(beta)));
                break;
            }
        }
    }
    return corpus;
}

}  // namespace slicestar
