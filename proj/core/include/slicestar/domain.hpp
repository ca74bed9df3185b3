#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "slicestar/path.hpp"
#include "slicestar/report.hpp"
#include "slicestar/slice_space.hpp"

namespace slicestar {

/// Axis-aligned search window in plane coordinates: x_l in [x_lo, x_hi],
/// |y_l| <= y_abs.  Grid searches and probe generators stay inside it.
struct PlaneBox {
    std::vector<double> x_lo;
    std::vector<double> x_hi;
    std::vector<double> y_abs;
};

/// Subset of the weakly slice cone given by a pure membership predicate plus
/// sampling metadata.  Immutable and cheap to copy.
class Domain {
public:
    using Predicate = std::function<bool(const SlicePoint&)>;

    Domain() = default;
    Domain(std::string name, json params, std::size_t n, Predicate contains,
           PlaneBox bounds, std::vector<UnitImaginary> probe_units);

    std::size_t dim() const;
    bool contains(const SlicePoint& q) const;
    const std::string& name() const;
    const json& params() const;
    const PlaneBox& bounds() const;
    /// Representative units whose slices the probe generator samples.
    const std::vector<UnitImaginary>& probe_units() const;

    bool valid() const { return impl_ != nullptr; }

private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
};

Domain make_euclidean_ball(const SlicePoint& center, double radius);
/// Euclidean ball with a real center.
Domain make_euclidean_ball(const std::vector<double>& center, double radius);
/// ball(0, 1.1) union ball(1 + i, 0.5): Euclidean-open, meets the real axis,
/// not axially symmetric (n = 1).
Domain make_nonaxisym_union();
/// Euclidean neighborhood of the lift of `base` at `unit`; isolates units at
/// angular scale thickness / |y|.
Domain make_slice_tube(const ComplexPath& base, const UnitImaginary& unit,
                       double thickness);
/// Re q_1 < c.
Domain make_halfspace(double c, std::size_t n = 1);
/// Constructor by name; throws UnknownDomain.
Domain make_domain(const std::string& name, const json& params);

/// Units whose whole lift of `path` stays inside the domain, in input order.
std::vector<UnitImaginary> slice_units(const Domain& domain,
                                       const ComplexPath& path,
                                       const std::vector<UnitImaginary>& units);

/// Two paths sharing an endpoint (within 1e-12).
struct PathPair {
    ComplexPath alpha;
    ComplexPath beta;
};

PathPair make_path_pair(ComplexPath alpha, ComplexPath beta);

struct PathfinderOptions {
    double grid_h = 0.05;
    double max_step = 0.05;
    /// User-supplied candidates, tried after the straight construction and
    /// before grid BFS; a candidate must end at the target's plane point.
    std::vector<ComplexPath> candidates;

    PathfinderOptions() = default;
    PathfinderOptions(double grid_h_, double max_step_)
        : grid_h(grid_h_), max_step(max_step_) {}
};

/// Straight construction first, then user-supplied candidates, then grid BFS
/// inside the target's slice (n <= 2).  The returned path is validated: its
/// lift at the target's canonical unit stays inside the domain at max_step
/// resolution.
std::optional<ComplexPath> find_real_path(const Domain& domain,
                                          const SlicePoint& target,
                                          const PathfinderOptions& opts = {});

/// Probe points and path corpora used by the checkers.
struct Corpus {
    std::vector<SlicePoint> probes;
    std::vector<ComplexPath> paths;
    std::vector<PathPair> pairs;
};

struct CorpusOptions {
    double probe_grid_h = 0.15;
    double max_step = 0.05;
    double bfs_grid_h = 0.05;
    std::size_t max_probes = 240;
    std::size_t min_real_endpoint_paths = 5;
};

/// Deterministic probe/path/pair corpus drawn from the domain's declared
/// probe units and its real trace.
Corpus build_corpus(const Domain& domain, const CorpusOptions& opts = {});

/// For each probe, attempts a path from the real locus whose lift ends there.
/// Throws EmptyRealTrace when the real trace is empty yet non-real probes
/// exist.
CheckReport check_real_path_connected(const Domain& domain,
                                      const std::vector<SlicePoint>& probes,
                                      const PathfinderOptions& opts = {});

/// Conditions for omega2 to preserve stems of omega1 paths: every corpus path
/// keeps at least two admissible units in omega2, and no endpoint-sharing
/// pair shares exactly one.
CheckReport check_stem_preserving(const Domain& omega1, const Domain& omega2,
                                  const std::vector<ComplexPath>& paths,
                                  const std::vector<PathPair>& pairs,
                                  const std::vector<UnitImaginary>& units);

/// Conjunction of real-path-connectivity and self stem preservation.
CheckReport check_self_stem_preserving(const Domain& domain, const Corpus& corpus,
                                       const std::vector<UnitImaginary>& units,
                                       const PathfinderOptions& opts = {});

/// Violation iff some probe lies in the domain but its conjugate does not.
CheckReport check_weakly_axially_symmetric(const Domain& domain,
                                           const std::vector<SlicePoint>& probes);

}  // namespace slicestar
