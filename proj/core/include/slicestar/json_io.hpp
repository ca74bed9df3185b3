#pragma once

#include "json.hpp"
#include "slicestar/path.hpp"
#include "slicestar/quaternion.hpp"
#include "slicestar/report.hpp"
#include "slicestar/slice_space.hpp"

namespace slicestar {

// Wire formats:
//   Quaternion     [w, x, y, z]
//   UnitImaginary  [x, y, z]
//   SlicePoint     {"x": [...], "y": [...], "I": [x,y,z] | null}
//   ComplexPath    {"n": n, "samples": [[[re...],[im...]], ...]}
//   CheckReport    {"verdict": ..., "witnesses": [...], "resolution": {...}}

void to_json(json& j, const Quaternion& q);
void from_json(const json& j, Quaternion& q);

void to_json(json& j, const UnitImaginary& u);
void from_json(const json& j, UnitImaginary& u);

void to_json(json& j, const SlicePoint& p);
void from_json(const json& j, SlicePoint& p);

void to_json(json& j, const ComplexPath& p);
void from_json(const json& j, ComplexPath& p);

void to_json(json& j, const CheckReport& r);

}  // namespace slicestar

#include "slicestar/domain.hpp"
#include "slicestar/stem.hpp"

namespace slicestar {

void to_json(json& j, const StemValue& v);
void from_json(const json& j, StemValue& v);

/// {"name": ..., "params": {...}} via the named constructors.
Domain domain_from_json(const json& j);

/// Function spec: {"type": "poly", "coeffs": [[w,x,y,z], ...]} or a named
/// builtin: "const" (+"value"), "identity", "one", "component-x",
/// "conj-identity", "exp-series" (+"terms").
PathSliceFn fn_from_json(const json& j, Domain domain);

/// Path spec: either a ComplexPath object or a generator:
/// {"generator": "segment"|"polyline"|"arc", ...}.
ComplexPath path_from_json(const json& j);

}  // namespace slicestar
