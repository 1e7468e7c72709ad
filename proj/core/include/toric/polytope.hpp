// Copyright 2026 The toric-alpha Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <span>
#include <string>
#include <vector>

#include "toric/rational.hpp"

namespace toric {

/// Primitive ray generators of a complete fan in the lattice N.
///
/// Construction checks integrality and primitivity of each ray; whether the
/// rays positively span (equivalently, whether the dual polytope is bounded)
/// is established when the polytope is built.
struct FanRays {
  std::size_t dim = 0;
  std::vector<RatVec> rays;

  FanRays() = default;
  FanRays(std::size_t dim, std::vector<RatVec> rays);
};

struct Halfspace {
  RatVec normal;  // <x, normal> <= rhs
  Rat rhs;
};

/// An edge of a simple polytope: an ordered vertex pair together with the
/// halfspace indices tight at both endpoints (rank exactly dim-1).
struct Edge {
  std::size_t a = 0, b = 0;  // vertex indices, a < b
  std::vector<std::size_t> common_tight;
};

/// A bounded rational polytope with synchronized halfspace and vertex
/// representations. Vertices are sorted lexicographically; each carries the
/// set of halfspaces it is tight on. Immutable after construction.
class Polytope {
 public:
  Polytope() = default;  // the empty polytope

  /// P = {y : <y, -v_i> <= 1} for the given fan rays, i.e. the polar of
  /// -conv(rays). Throws UnboundedError when the rays do not positively
  /// span, DegenerateError when some halfspace supports no vertex.
  static Polytope anticanonical(const FanRays& rays);

  static Polytope from_halfspaces(std::size_t dim, std::vector<Halfspace> hs);

  /// conv(points) by double polarity; requires the origin strictly inside.
  static Polytope from_vertices(std::size_t dim, const std::vector<RatVec>& points);

  std::size_t dim() const { return dim_; }
  const std::vector<Halfspace>& halfspaces() const { return halfspaces_; }
  const std::vector<RatVec>& vertices() const { return vertices_; }
  /// Sorted halfspace indices tight at vertex i.
  const std::vector<std::size_t>& tight_set(std::size_t i) const { return tight_[i]; }

  bool contains(const RatVec& x) const;
  bool strictly_contains(const RatVec& x) const;

  bool origin_interior() const;
  /// -P.
  Polytope negated() const;
  /// {y : <v, y> <= 1 for all vertices v}; requires the origin interior.
  Polytope polar() const;

  bool is_lattice() const;
  bool is_simple() const;
  bool centrally_symmetric() const;

 private:
  std::size_t dim_ = 0;
  std::vector<Halfspace> halfspaces_;
  std::vector<RatVec> vertices_;
  std::vector<std::vector<std::size_t>> tight_;
};

/// max over the point set of <x, y>; equals the support of the convex hull.
Rat support(std::span<const RatVec> points, const RatVec& y);

/// The near-norm ||x||_p = max over facets of <x, normal>/rhs.
/// Requires the origin in the interior of p.
Rat gauge(const Polytope& p, const RatVec& x);

/// All points of (1/k) Z^n inside p, in lexicographic order.
std::vector<RatVec> lattice_points(const Polytope& p, long k);

/// E_P(k) = |kP n Z^n|.
Int ehrhart_count(const Polytope& p, long k);

struct SmoothnessReport {
  bool smooth = false;
  /// When not smooth: ray indices tight on an offending facet of Q = conv(rays).
  std::vector<std::size_t> witness;
  std::string reason;
};

/// Checks that the rays on every facet of Q = conv(rays) form a Z-basis.
SmoothnessReport smoothness_check(const FanRays& rays);

/// True when every vertex is a lattice point.
bool integrality_check(const Polytope& p);

/// All edges of a simple polytope; throws NotSimpleError otherwise.
std::vector<Edge> edges(const Polytope& p);

/// Vertex enumeration for a bounded halfspace intersection: solve every
/// dim-subset, keep feasible solutions, dedup. Throws UnboundedError.
std::vector<RatVec> enumerate_vertices(std::size_t dim, const std::vector<Halfspace>& hs);

/// Recovers primitive fan rays from an anticanonical presentation
/// (each halfspace scaled to rhs 1 must have an integral primitive -normal).
FanRays rays_from_polytope(const Polytope& p);

}  // namespace toric
