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

#include "toric/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "toric/simplex.hpp"

namespace toric {

FanRays::FanRays(std::size_t dim_in, std::vector<RatVec> rays_in)
    : dim(dim_in), rays(std::move(rays_in)) {
  for (const auto& v : rays) {
    if (v.dim() != dim) throw DimensionMismatch("FanRays: ray dimension");
    if (!is_integral(v)) throw PreconditionError("FanRays: ray not a lattice vector");
    Int g = 0;
    for (const auto& c : v) g = gcd(g, numerator(c));
    if (g == 0) throw PreconditionError("FanRays: zero ray");
    if (g != 1 && g != -1)
      throw PreconditionError("FanRays: ray " + vec_to_string(v) + " is not primitive");
  }
}

namespace {

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] + (k - i) < n) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Throws UnboundedError if max x_i or min x_i over the intersection is
// unbounded; returns false when the intersection is empty.
bool check_bounded(std::size_t dim, const std::vector<Halfspace>& hs) {
  for (std::size_t i = 0; i < dim; ++i) {
    for (int sign : {1, -1}) {
      LinearProgram lp;
      lp.sense = Sense::Maximize;
      lp.objective = RatVec(dim);
      lp.objective[i] = sign;
      lp.lower_bounds.assign(dim, std::nullopt);
      for (const auto& h : hs) lp.le_rows.emplace_back(h.normal, h.rhs);
      const auto out = solve(lp);
      if (out.status == LpStatus::Unbounded)
        throw UnboundedError("halfspace intersection is unbounded in coordinate " +
                             std::to_string(i));
      if (out.status == LpStatus::Infeasible) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<RatVec> enumerate_vertices(std::size_t dim, const std::vector<Halfspace>& hs) {
  if (!check_bounded(dim, hs)) return {};
  std::set<RatVec> found;
  if (hs.size() < dim) return {};
  std::vector<std::size_t> idx(dim);
  for (std::size_t i = 0; i < dim; ++i) idx[i] = i;
  do {
    RatMat a(dim, dim);
    RatVec b(dim);
    for (std::size_t r = 0; r < dim; ++r) {
      for (std::size_t c = 0; c < dim; ++c) a(r, c) = hs[idx[r]].normal[c];
      b[r] = hs[idx[r]].rhs;
    }
    const auto x = solve_linear(a, b);
    if (!x) continue;
    bool feasible = true;
    for (const auto& h : hs) {
      if (dot(*x, h.normal) > h.rhs) {
        feasible = false;
        break;
      }
    }
    if (feasible) found.insert(*x);
  } while (next_combination(idx, hs.size()));
  return {found.begin(), found.end()};
}

Polytope Polytope::from_halfspaces(std::size_t dim, std::vector<Halfspace> hs) {
  for (const auto& h : hs)
    if (h.normal.dim() != dim) throw DimensionMismatch("Polytope: halfspace dimension");
  Polytope p;
  p.dim_ = dim;
  p.vertices_ = enumerate_vertices(dim, hs);
  p.halfspaces_ = std::move(hs);
  p.tight_.resize(p.vertices_.size());
  for (std::size_t i = 0; i < p.vertices_.size(); ++i)
    for (std::size_t j = 0; j < p.halfspaces_.size(); ++j)
      if (dot(p.vertices_[i], p.halfspaces_[j].normal) == p.halfspaces_[j].rhs)
        p.tight_[i].push_back(j);
  return p;
}

Polytope Polytope::anticanonical(const FanRays& rays) {
  std::vector<Halfspace> hs;
  hs.reserve(rays.rays.size());
  for (const auto& v : rays.rays) hs.push_back({-v, Rat(1)});
  Polytope p = from_halfspaces(rays.dim, std::move(hs));
  if (p.vertices_.empty()) throw DegenerateError("anticanonical polytope has no vertices");
  std::vector<bool> supported(p.halfspaces_.size(), false);
  for (const auto& t : p.tight_)
    for (auto j : t) supported[j] = true;
  for (std::size_t j = 0; j < supported.size(); ++j)
    if (!supported[j])
      throw DegenerateError("halfspace of ray " + vec_to_string(rays.rays[j]) +
                            " supports no vertex");
  return p;
}

Polytope Polytope::from_vertices(std::size_t dim, const std::vector<RatVec>& points) {
  std::set<RatVec> uniq(points.begin(), points.end());
  std::vector<Halfspace> polar_hs;
  for (const auto& v : uniq) {
    if (v.dim() != dim) throw DimensionMismatch("from_vertices: point dimension");
    polar_hs.push_back({v, Rat(1)});
  }
  Polytope dual;
  try {
    dual = from_halfspaces(dim, std::move(polar_hs));
  } catch (const UnboundedError&) {
    throw PreconditionError("from_vertices: origin is not interior to the hull");
  }
  if (dual.vertices_.empty())
    throw PreconditionError("from_vertices: origin is not interior to the hull");
  std::vector<Halfspace> hs;
  for (const auto& w : dual.vertices_) hs.push_back({w, Rat(1)});
  Polytope p = from_halfspaces(dim, std::move(hs));
  for (const auto& v : uniq)
    if (!p.contains(v)) throw Error("from_vertices: hull reconstruction failed");
  return p;
}

bool Polytope::contains(const RatVec& x) const {
  for (const auto& h : halfspaces_)
    if (dot(x, h.normal) > h.rhs) return false;
  return true;
}

bool Polytope::strictly_contains(const RatVec& x) const {
  for (const auto& h : halfspaces_)
    if (dot(x, h.normal) >= h.rhs) return false;
  return true;
}

bool Polytope::origin_interior() const {
  if (vertices_.empty()) return false;
  for (const auto& h : halfspaces_)
    if (h.rhs <= 0) return false;
  return true;
}

Polytope Polytope::negated() const {
  Polytope p;
  p.dim_ = dim_;
  p.halfspaces_.reserve(halfspaces_.size());
  for (const auto& h : halfspaces_) p.halfspaces_.push_back({-h.normal, h.rhs});
  // Vertex/tight data carries over; only the lexicographic order changes.
  std::vector<std::pair<RatVec, std::vector<std::size_t>>> vt;
  vt.reserve(vertices_.size());
  for (std::size_t i = 0; i < vertices_.size(); ++i) vt.emplace_back(-vertices_[i], tight_[i]);
  std::sort(vt.begin(), vt.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [v, t] : vt) {
    p.vertices_.push_back(std::move(v));
    p.tight_.push_back(std::move(t));
  }
  return p;
}

Polytope Polytope::polar() const {
  if (!origin_interior()) throw PreconditionError("polar: origin is not interior");
  std::vector<Halfspace> hs;
  hs.reserve(vertices_.size());
  for (const auto& v : vertices_) hs.push_back({v, Rat(1)});
  return from_halfspaces(dim_, std::move(hs));
}

bool Polytope::is_lattice() const {
  for (const auto& v : vertices_)
    if (denominator_lcm(v) != 1) return false;
  return true;
}

bool Polytope::is_simple() const {
  for (const auto& t : tight_)
    if (t.size() != dim_) return false;
  return true;
}

bool Polytope::centrally_symmetric() const {
  std::set<RatVec> set(vertices_.begin(), vertices_.end());
  for (const auto& v : vertices_)
    if (!set.count(-v)) return false;
  return true;
}

Rat support(std::span<const RatVec> points, const RatVec& y) {
  if (points.empty()) throw PreconditionError("support: empty point set");
  Rat best = dot(points[0], y);
  for (std::size_t i = 1; i < points.size(); ++i) best = std::max(best, dot(points[i], y));
  return best;
}

Rat gauge(const Polytope& p, const RatVec& x) {
  if (!p.origin_interior()) throw PreconditionError("gauge: origin is not interior");
  Rat best = 0;  // attained at x = 0; facet normals positively span otherwise
  for (const auto& h : p.halfspaces()) best = std::max(best, dot(x, h.normal) / h.rhs);
  return best;
}

namespace {

struct ScaledHalfspace {
  std::vector<Int> normal;
  Int rhs;  // <y, normal> <= k * rhs after scaling
};

std::vector<ScaledHalfspace> integer_halfspaces(const Polytope& p) {
  std::vector<ScaledHalfspace> out;
  for (const auto& h : p.halfspaces()) {
    Int l = denominator(h.rhs);
    for (const auto& c : h.normal) l = lcm(l, denominator(c));
    ScaledHalfspace s;
    for (const auto& c : h.normal) s.normal.push_back(numerator(c) * (l / denominator(c)));
    s.rhs = numerator(h.rhs) * (l / denominator(h.rhs));
    out.push_back(std::move(s));
  }
  return out;
}

// Visits the integer points of k*p in lexicographic order.
template <typename Fn>
void scan_dilate(const Polytope& p, long k, Fn&& fn) {
  const std::size_t n = p.dim();
  if (p.vertices().empty()) return;
  const auto hs = integer_halfspaces(p);
  std::vector<Int> lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rat mn = p.vertices()[0][i], mx = mn;
    for (const auto& v : p.vertices()) {
      mn = std::min(mn, v[i]);
      mx = std::max(mx, v[i]);
    }
    lo[i] = ceil_int(Rat(k) * mn);
    hi[i] = floor_int(Rat(k) * mx);
  }
  std::vector<Int> y(n);
  auto rec = [&](auto&& self, std::size_t d) -> void {
    if (d == n) {
      for (const auto& h : hs) {
        Int acc = 0;
        for (std::size_t i = 0; i < n; ++i) acc += y[i] * h.normal[i];
        if (acc > Int(k) * h.rhs) return;
      }
      fn(y);
      return;
    }
    for (Int v = lo[d]; v <= hi[d]; ++v) {
      y[d] = v;
      self(self, d + 1);
    }
  };
  rec(rec, 0);
}

}  // namespace

std::vector<RatVec> lattice_points(const Polytope& p, long k) {
  if (k <= 0) throw PreconditionError("lattice_points: k must be positive");
  std::vector<RatVec> out;
  scan_dilate(p, k, [&](const std::vector<Int>& y) {
    RatVec x(p.dim());
    for (std::size_t i = 0; i < p.dim(); ++i) x[i] = make_rat(y[i], Int(k));
    out.push_back(std::move(x));
  });
  return out;
}

Int ehrhart_count(const Polytope& p, long k) {
  if (k <= 0) throw PreconditionError("ehrhart_count: k must be positive");
  Int count = 0;
  scan_dilate(p, k, [&](const std::vector<Int>&) { ++count; });
  return count;
}

SmoothnessReport smoothness_check(const FanRays& rays) {
  const Polytope p = Polytope::anticanonical(rays);
  const std::size_t n = rays.dim;
  // A vertex u of P corresponds to the facet of Q = conv(rays) spanned by the
  // rays tight at u; smoothness asks those rays to form a Z-basis.
  for (std::size_t i = 0; i < p.vertices().size(); ++i) {
    const auto& tight = p.tight_set(i);
    if (tight.size() != n) {
      SmoothnessReport r;
      r.witness = tight;
      r.reason = "facet of Q supported by vertex " + vec_to_string(p.vertices()[i]) +
                 " has " + std::to_string(tight.size()) + " rays (expected " +
                 std::to_string(n) + ")";
      return r;
    }
    RatMat m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = rays.rays[tight[r]][c];
    const Rat d = det(m);
    if (d != 1 && d != -1) {
      SmoothnessReport r;
      r.witness = tight;
      r.reason = "rays on the facet at vertex " + vec_to_string(p.vertices()[i]) +
                 " have determinant " + rat_to_string(d);
      return r;
    }
  }
  SmoothnessReport r;
  r.smooth = true;
  return r;
}

bool integrality_check(const Polytope& p) { return p.is_lattice(); }

std::vector<Edge> edges(const Polytope& p) {
  const std::size_t n = p.dim();
  for (std::size_t i = 0; i < p.vertices().size(); ++i)
    if (p.tight_set(i).size() > n)
      throw NotSimpleError("vertex " + vec_to_string(p.vertices()[i]) + " has " +
                           std::to_string(p.tight_set(i).size()) + " tight halfspaces");
  std::vector<Edge> out;
  for (std::size_t a = 0; a < p.vertices().size(); ++a) {
    for (std::size_t b = a + 1; b < p.vertices().size(); ++b) {
      std::vector<std::size_t> common;
      std::set_intersection(p.tight_set(a).begin(), p.tight_set(a).end(),
                            p.tight_set(b).begin(), p.tight_set(b).end(),
                            std::back_inserter(common));
      if (common.size() + 1 < n) continue;
      RatMat m(common.size(), n);
      for (std::size_t r = 0; r < common.size(); ++r)
        for (std::size_t c = 0; c < n; ++c) m(r, c) = p.halfspaces()[common[r]].normal[c];
      if (rank(m) == n - 1) out.push_back({a, b, std::move(common)});
    }
  }
  return out;
}

FanRays rays_from_polytope(const Polytope& p) {
  std::vector<RatVec> rays;
  for (const auto& h : p.halfspaces()) {
    if (h.rhs <= 0)
      throw PreconditionError("rays_from_polytope: halfspace with non-positive rhs");
    RatVec v = -(Rat(1) / h.rhs) * h.normal;
    if (!is_integral(v))
      throw PreconditionError("rays_from_polytope: facet normal " + vec_to_string(v) +
                              " is not a lattice vector");
    rays.push_back(std::move(v));
  }
  return FanRays(p.dim(), std::move(rays));
}

}  // namespace toric
