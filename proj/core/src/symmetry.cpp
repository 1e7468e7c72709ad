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

#include "toric/symmetry.hpp"

#include <algorithm>
#include <set>

#include "toric/simplex.hpp"

namespace toric {

UnimodularMap UnimodularMap::validated(RatMat m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("UnimodularMap: non-square matrix");
  if (!m.is_integral()) throw PreconditionError("UnimodularMap: matrix is not integral");
  const Rat d = det(m);
  if (d != 1 && d != -1)
    throw PreconditionError("UnimodularMap: determinant " + rat_to_string(d) + " is not +-1");
  return UnimodularMap{std::move(m)};
}

UnimodularMap UnimodularMap::identity(std::size_t n) {
  return UnimodularMap{RatMat::identity(n)};
}

bool FiniteGroup::contains(const UnimodularMap& g) const {
  return std::binary_search(elements.begin(), elements.end(), g);
}

std::vector<RatVec> FiniteGroup::orbit(const RatVec& x) const {
  std::set<RatVec> out;
  for (const auto& g : elements) out.insert(g.apply(x));
  return {out.begin(), out.end()};
}

FiniteGroup trivial_group(std::size_t dim) {
  FiniteGroup g;
  g.dim = dim;
  g.elements = {UnimodularMap::identity(dim)};
  return g;
}

namespace {

bool maps_vertices_onto(const RatMat& a, const std::set<RatVec>& verts) {
  for (const auto& v : verts)
    if (!verts.count(a.apply(v))) return false;
  return true;  // injective on a finite set, hence onto
}

}  // namespace

FiniteGroup automorphism_group(const Polytope& p) {
  const std::size_t n = p.dim();
  const auto& verts = p.vertices();
  if (verts.empty()) throw PreconditionError("automorphism_group: empty polytope");
  const std::set<RatVec> vert_set(verts.begin(), verts.end());

  // Greedy frame of n linearly independent vertices.
  std::vector<std::size_t> frame;
  {
    RatMat probe(n, 0);
    std::vector<RatVec> chosen;
    for (std::size_t i = 0; i < verts.size() && chosen.size() < n; ++i) {
      RatMat m(chosen.size() + 1, n);
      for (std::size_t r = 0; r < chosen.size(); ++r)
        for (std::size_t c = 0; c < n; ++c) m(r, c) = chosen[r][c];
      for (std::size_t c = 0; c < n; ++c) m(chosen.size(), c) = verts[i][c];
      if (rank(m) == chosen.size() + 1) {
        chosen.push_back(verts[i]);
        frame.push_back(i);
      }
    }
    if (chosen.size() != n)
      throw PreconditionError("automorphism_group: vertices do not span (no linear frame)");
  }
  RatMat u(n, n);  // frame vertices as columns
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) u(r, c) = verts[frame[c]][r];
  const auto u_inv = inverse(u);
  if (!u_inv) throw Error("automorphism_group: frame matrix singular");

  std::set<UnimodularMap> found;
  // Try every ordered n-tuple of distinct vertices as the frame's image.
  std::vector<std::size_t> pick(n, 0);
  std::vector<bool> used(verts.size(), false);
  auto rec = [&](auto&& self, std::size_t depth) -> void {
    if (depth == n) {
      RatMat w(n, n);
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < n; ++r) w(r, c) = verts[pick[c]][r];
      RatMat a = w * *u_inv;
      if (!a.is_integral()) return;
      const Rat d = det(a);
      if (d != 1 && d != -1) return;
      if (!maps_vertices_onto(a, vert_set)) return;
      found.insert(UnimodularMap{std::move(a)});
      return;
    }
    for (std::size_t i = 0; i < verts.size(); ++i) {
      if (used[i]) continue;
      used[i] = true;
      pick[depth] = i;
      self(self, depth + 1);
      used[i] = false;
    }
  };
  rec(rec, 0);

  FiniteGroup g;
  g.dim = n;
  g.elements.assign(found.begin(), found.end());
  return g;
}

FiniteGroup subgroup_closure(std::span<const UnimodularMap> gens, const FiniteGroup& within) {
  for (const auto& gen : gens)
    if (!within.contains(gen))
      throw PreconditionError("subgroup_closure: generator is not an automorphism of P");

  std::set<UnimodularMap> closed;
  closed.insert(UnimodularMap::identity(within.dim));
  for (const auto& gen : gens) closed.insert(gen);
  // Multiply until closed; every element of a finite group generated this way
  // appears as a product of generators.
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<UnimodularMap> snapshot(closed.begin(), closed.end());
    for (const auto& a : snapshot) {
      for (const auto& b : snapshot) {
        UnimodularMap ab{a.matrix * b.matrix};
        if (closed.insert(std::move(ab)).second) grew = true;
      }
    }
    if (closed.size() > within.order())
      throw Error("subgroup_closure: closure escaped the ambient group");
  }

  FiniteGroup g;
  g.dim = within.dim;
  g.elements.assign(closed.begin(), closed.end());
  for (const auto& gen : gens) {
    const auto it = std::lower_bound(g.elements.begin(), g.elements.end(), gen);
    g.generator_indices.push_back(std::size_t(it - g.elements.begin()));
  }
  return g;
}

bool preserves(const FiniteGroup& h, const Polytope& p) {
  const std::set<RatVec> verts(p.vertices().begin(), p.vertices().end());
  for (const auto& g : h.elements)
    if (!maps_vertices_onto(g.matrix, verts)) return false;
  return true;
}

OrbitDecomposition orbit_decomposition(const FiniteGroup& h, const Polytope& p, long k) {
  if (!preserves(h, p)) throw PreconditionError("orbit_decomposition: group does not preserve P");
  const auto points = lattice_points(p, k);
  const std::set<RatVec> point_set(points.begin(), points.end());

  OrbitDecomposition dec;
  dec.k = k;
  std::set<RatVec> seen;
  for (const auto& x : points) {  // lexicographic order makes reps lex-least
    if (seen.count(x)) continue;
    auto orb = h.orbit(x);
    for (const auto& y : orb) {
      if (!point_set.count(y))
        throw Error("orbit_decomposition: orbit left the lattice point set");
      seen.insert(y);
    }
    dec.representatives.push_back(orb.front());
    dec.orbits.push_back(std::move(orb));
  }
  return dec;
}

RatVec project_pi_H(const FiniteGroup& h, const RatVec& x) {
  RatVec acc(x.dim());
  for (const auto& g : h.elements) acc += g.apply(x);
  return make_rat(1, Int(h.order())) * acc;
}

namespace {

// x extreme among pts  <=>  x not in conv(pts \ {x}).
bool in_hull_of_others(const RatVec& x, const std::vector<RatVec>& pts, std::size_t skip) {
  const std::size_t n = x.dim();
  const std::size_t m = pts.size() - 1;
  if (m == 0) return false;
  LinearProgram lp;
  lp.sense = Sense::Maximize;
  lp.objective = RatVec(m);
  lp.lower_bounds.assign(m, Rat(0));
  for (std::size_t r = 0; r < n; ++r) {
    RatVec row(m);
    std::size_t c = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i == skip) continue;
      row[c++] = pts[i][r];
    }
    lp.eq_rows.emplace_back(std::move(row), x[r]);
  }
  lp.eq_rows.emplace_back(RatVec(std::vector<Rat>(m, Rat(1))), Rat(1));
  return solve(lp).status == LpStatus::Optimal;
}

}  // namespace

std::vector<RatVec> fixed_polytope_vertices(const FiniteGroup& h, const Polytope& p,
                                            bool filter_extreme) {
  if (!preserves(h, p))
    throw PreconditionError("fixed_polytope_vertices: group does not preserve P");
  std::set<RatVec> proj;
  for (const auto& v : p.vertices()) proj.insert(project_pi_H(h, v));
  std::vector<RatVec> out(proj.begin(), proj.end());
  if (filter_extreme && out.size() > 1) {
    std::vector<RatVec> extreme;
    for (std::size_t i = 0; i < out.size(); ++i)
      if (!in_hull_of_others(out[i], out, i)) extreme.push_back(out[i]);
    out = std::move(extreme);
  }
  return out;
}

}  // namespace toric
