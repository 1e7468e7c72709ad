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

#include <doctest.h>

#include <random>
#include <set>

#include "toric/catalog.hpp"
#include "toric/symmetry.hpp"

using namespace toric;

namespace {

Polytope poly(const char* name) {
  return Polytope::anticanonical(find_catalog_entry(name)->rays);
}

UnimodularMap mat2(long a, long b, long c, long d) {
  return UnimodularMap::validated(RatMat{{Rat(a), Rat(b)}, {Rat(c), Rat(d)}});
}

const UnimodularMap kSwap = mat2(0, 1, 1, 0);
const UnimodularMap kCycle3 = mat2(-1, -1, 1, 0);

}  // namespace

TEST_CASE("unimodular validation") {
  CHECK_THROWS_AS(UnimodularMap::validated(RatMat{{Rat(2), Rat(0)}, {Rat(0), Rat(1)}}),
                  PreconditionError);
  CHECK_THROWS_AS(
      UnimodularMap::validated(RatMat{{make_rat(Int(1), Int(2)), Rat(0)}, {Rat(0), Rat(1)}}),
      PreconditionError);
  CHECK_NOTHROW(UnimodularMap::validated(RatMat{{Rat(0), Rat(-1)}, {Rat(1), Rat(0)}}));
}

TEST_CASE("automorphism group orders across the catalog") {
  CHECK(automorphism_group(poly("p2")).order() == 6);
  CHECK(automorphism_group(poly("dp1")).order() == 2);
  CHECK(automorphism_group(poly("dp2")).order() == 2);
  CHECK(automorphism_group(poly("dp3")).order() == 12);
  CHECK(automorphism_group(poly("p1xp1")).order() == 8);
  CHECK(automorphism_group(poly("p1cubed")).order() == 48);
}

TEST_CASE("automorphism groups satisfy the group axioms") {
  for (const char* name : {"p2", "dp1", "dp3", "p1xp1"}) {
    const FiniteGroup g = automorphism_group(poly(name));
    const UnimodularMap id = UnimodularMap::identity(g.dim);
    CHECK(g.contains(id));
    for (const auto& a : g.elements) {
      bool has_inverse = false;
      for (const auto& b : g.elements) {
        CHECK(g.contains(UnimodularMap{a.matrix * b.matrix}));
        if (UnimodularMap{a.matrix * b.matrix} == id) has_inverse = true;
      }
      CHECK(has_inverse);
    }
  }
}

TEST_CASE("subgroup closure") {
  const Polytope p2 = poly("p2");
  const FiniteGroup aut = automorphism_group(p2);
  CHECK(subgroup_closure({}, aut).order() == 1);
  CHECK(subgroup_closure(std::vector{kSwap}, aut).order() == 2);
  CHECK(subgroup_closure(std::vector{kCycle3}, aut).order() == 3);
  // A shear preserves the lattice but not the triangle.
  CHECK_THROWS_AS(subgroup_closure(std::vector{mat2(1, 1, 0, 1)}, aut), PreconditionError);
}

TEST_CASE("orbit decompositions of the plane") {
  const Polytope p2 = poly("p2");
  const FiniteGroup aut = automorphism_group(p2);
  {
    const auto dec = orbit_decomposition(subgroup_closure(std::vector{kSwap}, aut), p2, 1);
    CHECK(dec.orbits.size() == 6);
  }
  {
    const auto dec = orbit_decomposition(subgroup_closure(std::vector{kCycle3}, aut), p2, 1);
    CHECK(dec.orbits.size() == 4);
  }
  {
    const auto dec = orbit_decomposition(trivial_group(2), p2, 1);
    CHECK(dec.orbits.size() == 10);
    for (const auto& orbit : dec.orbits) CHECK(orbit.size() == 1);
  }
}

TEST_CASE("orbit sizes divide the group order and orbits partition") {
  for (const char* name : {"p2", "dp1", "dp2", "dp3", "p1xp1"}) {
    const Polytope p = poly(name);
    const FiniteGroup aut = automorphism_group(p);
    for (long k = 1; k <= 3; ++k) {
      const auto dec = orbit_decomposition(aut, p, k);
      std::size_t total = 0;
      std::set<RatVec> seen;
      for (const auto& orbit : dec.orbits) {
        CHECK(aut.order() % orbit.size() == 0);
        total += orbit.size();
        seen.insert(orbit.begin(), orbit.end());
      }
      CHECK(Int(total) == ehrhart_count(p, k));
      CHECK(seen.size() == total);  // disjoint
    }
  }
}

TEST_CASE("group elements permute the lattice points") {
  const Polytope p = poly("dp3");
  const FiniteGroup aut = automorphism_group(p);
  for (long k = 1; k <= 5; ++k) {
    const auto pts = lattice_points(p, k);
    const std::set<RatVec> set(pts.begin(), pts.end());
    for (const auto& g : aut.elements) {
      for (const auto& x : pts) CHECK(set.count(g.apply(x)) == 1);
    }
  }
}

TEST_CASE("averaging projection") {
  const Polytope p2 = poly("p2");
  const FiniteGroup aut = automorphism_group(p2);
  const FiniteGroup swap = subgroup_closure(std::vector{kSwap}, aut);

  CHECK(project_pi_H(trivial_group(2), RatVec{Rat(2), Rat(-1)}) == RatVec{Rat(2), Rat(-1)});
  CHECK(project_pi_H(swap, RatVec{Rat(2), Rat(-1)}) ==
        RatVec{make_rat(Int(1), Int(2)), make_rat(Int(1), Int(2))});
  for (const auto& v : p2.vertices()) CHECK(project_pi_H(aut, v) == RatVec(2));

  // Idempotence on random rational points.
  std::mt19937_64 rng(3);
  for (int t = 0; t < 25; ++t) {
    const RatVec x{make_rat(Int(long(rng() % 19) - 9), Int(1 + rng() % 5)),
                   make_rat(Int(long(rng() % 19) - 9), Int(1 + rng() % 5))};
    const RatVec once = project_pi_H(swap, x);
    CHECK(project_pi_H(swap, once) == once);
  }
}

TEST_CASE("fixed polytope vertices") {
  const Polytope p2 = poly("p2");
  const FiniteGroup aut2 = automorphism_group(p2);
  const auto seg = fixed_polytope_vertices(subgroup_closure(std::vector{kSwap}, aut2), p2);
  CHECK(seg == std::vector<RatVec>{RatVec{Rat(-1), Rat(-1)},
                                   RatVec{make_rat(Int(1), Int(2)), make_rat(Int(1), Int(2))}});

  CHECK(fixed_polytope_vertices(trivial_group(2), p2) == p2.vertices());

  const Polytope sq = poly("p1xp1");
  CHECK(fixed_polytope_vertices(automorphism_group(sq), sq) ==
        std::vector<RatVec>{RatVec(2)});

  // dp2 with its full reflection: pi_H(Ver P) is a strict superset of
  // Ver(P^H); the origin sits inside the fixed segment.
  const Polytope dp2 = poly("dp2");
  const auto proj = fixed_polytope_vertices(automorphism_group(dp2), dp2);
  CHECK(proj.size() == 3);
  const auto extreme = fixed_polytope_vertices(automorphism_group(dp2), dp2, true);
  CHECK(extreme == std::vector<RatVec>{RatVec{Rat(-1), Rat(-1)},
                                       RatVec{make_rat(Int(1), Int(2)), make_rat(Int(1), Int(2))}});
}

TEST_CASE("centrally symmetric dihedral examples fix only the origin") {
  for (const char* name : {"dp3", "p1xp1", "p1cubed"}) {
    const Polytope p = poly(name);
    const auto fixed = fixed_polytope_vertices(automorphism_group(p), p);
    CHECK(fixed == std::vector<RatVec>{RatVec(p.dim())});
  }
}
