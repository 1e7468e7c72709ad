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
#include "toric/invariants.hpp"

using namespace toric;

namespace {

Polytope poly(const char* name) {
  return Polytope::anticanonical(find_catalog_entry(name)->rays);
}

const FanRays& rays(const char* name) { return find_catalog_entry(name)->rays; }

UnimodularMap mat2(long a, long b, long c, long d) {
  return UnimodularMap::validated(RatMat{{Rat(a), Rat(b)}, {Rat(c), Rat(d)}});
}

Rat r(long n, long d = 1) { return make_rat(Int(n), Int(d)); }

// All distinct cyclic subgroups of Aut P.
std::vector<FiniteGroup> cyclic_subgroups(const FiniteGroup& aut) {
  std::vector<FiniteGroup> out;
  std::set<std::vector<UnimodularMap>> seen;
  for (const auto& g : aut.elements) {
    FiniteGroup h = subgroup_closure(std::vector{g}, aut);
    if (seen.insert(h.elements).second) out.push_back(std::move(h));
  }
  return out;
}

}  // namespace

TEST_CASE("alpha_kG on the worked examples") {
  {
    const auto a = alpha_kG(poly("p2"), rays("p2"), trivial_group(2), 1);
    CHECK(a.value == r(1, 3));
    CHECK(a.witness_point == RatVec{Rat(-1), Rat(-1)});  // lex-least minimizing vertex
  }
  CHECK(alpha_kG(poly("p2"), rays("p2"), automorphism_group(poly("p2")), 1).value == Rat(1));
  {
    const auto a = alpha_kG(poly("dp1"), rays("dp1"), automorphism_group(poly("dp1")), 1);
    CHECK(a.value == r(1, 2));
    CHECK(a.witness_point == RatVec{r(-1, 2), r(-1, 2)});  // one of +-(1/2,1/2)
  }
  {
    const auto a = alpha_kG(poly("dp2"), rays("dp2"), automorphism_group(poly("dp2")), 1);
    CHECK(a.value == r(1, 3));
    CHECK(a.witness_point == RatVec{Rat(-1), Rat(-1)});
  }
  CHECK_THROWS_AS(alpha_kG(poly("p2"), rays("p2"), automorphism_group(poly("p1xp1")), 1),
                  PreconditionError);
}

TEST_CASE("alpha via orbits on the worked examples") {
  const Polytope p2 = poly("p2");
  const FiniteGroup aut = automorphism_group(p2);
  CHECK(alpha_via_orbits(p2, rays("p2"), subgroup_closure(std::vector{mat2(0, 1, 1, 0)}, aut), 1)
            .value == r(1, 3));
  CHECK(alpha_via_orbits(p2, rays("p2"), subgroup_closure(std::vector{mat2(-1, -1, 1, 0)}, aut), 1)
            .value == Rat(1));
  CHECK(alpha_via_orbits(p2, rays("p2"), trivial_group(2), 1).value == r(1, 3));
}

TEST_CASE("the two alpha formulas agree for every cyclic subgroup and k <= 3") {
  for (const auto& entry : catalog()) {
    const Polytope p = Polytope::anticanonical(entry.rays);
    for (const auto& h : cyclic_subgroups(automorphism_group(p))) {
      const Rat vertex = alpha_kG(p, entry.rays, h, 1).value;
      for (long k = 1; k <= 3; ++k) {
        CHECK(alpha_kG(p, entry.rays, h, k).value == vertex);
        CHECK(alpha_via_orbits(p, entry.rays, h, k).value == vertex);
      }
    }
  }
}

TEST_CASE("c_k_subset") {
  const Polytope p2 = poly("p2");
  CHECK(c_k_subset(p2, std::vector<RatVec>{RatVec(2)}) == Rat(1));
  CHECK(c_k_subset(p2, std::vector<RatVec>{RatVec{Rat(2), Rat(-1)}}) == r(1, 3));
  CHECK(c_k_subset(p2, std::vector<RatVec>{RatVec{Rat(2), Rat(-1)}, RatVec{Rat(-1), Rat(2)}}) ==
        r(2, 3));
  CHECK_THROWS_AS(c_k_subset(p2, std::vector<RatVec>{}), PreconditionError);
  CHECK_THROWS_AS(c_k_subset(p2, std::vector<RatVec>{RatVec{Rat(3), Rat(0)}}), PreconditionError);
}

TEST_CASE("c_general") {
  const Polytope p2 = poly("p2");
  const Polytope sq = poly("p1xp1");
  // 0 in conv F forces the value 1.
  CHECK(c_general(std::vector<RatVec>{RatVec(2)}, p2.vertices()) == Rat(1));
  CHECK(c_general(std::vector<RatVec>{RatVec{Rat(2), Rat(-1)}}, lattice_points(p2, 1)) == r(1, 3));
  CHECK(c_general(std::vector<RatVec>{RatVec{Rat(1), Rat(1)}}, sq.vertices()) == r(1, 2));
  // Origin not interior to conv U.
  CHECK_THROWS_AS(c_general(std::vector<RatVec>{RatVec{Rat(1), Rat(1)}},
                            std::vector<RatVec>{RatVec{Rat(1), Rat(0)}, RatVec{Rat(0), Rat(1)}}),
                  PreconditionError);
}

TEST_CASE("c_general agrees with the gauge route on random subsets") {
  std::mt19937_64 rng(17);
  for (const auto& entry : catalog()) {
    const Polytope p = Polytope::anticanonical(entry.rays);
    const auto ground = lattice_points(p, 1);  // conv = P
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<RatVec> f;
      const std::size_t size = 1 + rng() % 3;
      for (std::size_t i = 0; i < size; ++i) f.push_back(ground[rng() % ground.size()]);
      CHECK(c_general(f, ground) == c_k_subset(p, f));
    }
  }
}

TEST_CASE("alpha_km on the projective plane") {
  const Polytope p2 = poly("p2");
  CHECK(alpha_km(p2, rays("p2"), 1, 2).value == r(1, 2));
  CHECK(alpha_km(p2, rays("p2"), 2, 2).value == r(2, 5));
  for (long k = 1; k <= 6; ++k) CHECK(alpha_km(p2, rays("p2"), k, 2).value == r(k, 3 * k - 1));
}

TEST_CASE("alpha_km with m = 1 equals alpha with the trivial group") {
  for (const char* name : {"p2", "dp1", "dp2", "dp3", "p1xp1", "p3"}) {
    const Rat a = alpha_kG(poly(name), rays(name), trivial_group(poly(name).dim()), 1).value;
    for (long k = 1; k <= 3; ++k) CHECK(alpha_km(poly(name), rays(name), k, 1).value == a);
  }
}

TEST_CASE("alpha_km witness reproduces the value") {
  const Polytope p2 = poly("p2");
  const auto a = alpha_km(p2, rays("p2"), 2, 2);
  CHECK(a.witness_subset.size() == 2);
  CHECK(c_k_subset(p2, a.witness_subset) == a.value);
}

TEST_CASE("alpha_km monotonicity in m") {
  for (const char* name : {"p2", "dp1", "dp2", "dp3", "p1xp1"}) {
    for (long k = 1; k <= 3; ++k) {
      Rat prev = alpha_km(poly(name), rays(name), k, 1).value;
      for (long m = 2; m <= 4; ++m) {
        const Rat cur = alpha_km(poly(name), rays(name), k, m).value;
        CHECK(cur >= prev);
        prev = cur;
      }
    }
  }
}

TEST_CASE("alpha_km rejects m beyond the section count") {
  CHECK_THROWS_AS(alpha_km(poly("p2"), rays("p2"), 1, 11), NoInvariantSubspaceError);
  CHECK_THROWS_AS(alpha_km(poly("p2"), rays("p2"), 1, 0), PreconditionError);
}

TEST_CASE("alpha_km is independent of the thread count") {
  const Polytope p2 = poly("p2");
  SearchStats s1, s4;
  const auto one = alpha_km(p2, rays("p2"), 4, 3, 1, &s1);
  const auto four = alpha_km(p2, rays("p2"), 4, 3, 4, &s4);
  CHECK(one.value == four.value);
  CHECK(one.witness_subset == four.witness_subset);
}

TEST_CASE("star_p truth table") {
  CHECK(star_p_check(poly("p2"), rays("p2")).holds);
  CHECK(star_p_check(poly("dp1"), rays("dp1")).holds);
  CHECK(star_p_check(poly("dp2"), rays("dp2")).holds);
  CHECK(!star_p_check(poly("dp3"), rays("dp3")).holds);
  CHECK(!star_p_check(poly("p1xp1"), rays("p1xp1")).holds);
  CHECK(!star_p_check(poly("p2xp1"), rays("p2xp1")).holds);
  CHECK(!star_p_check(poly("p1cubed"), rays("p1cubed")).holds);

  const auto rep = star_p_check(poly("p2"), rays("p2"));
  CHECK(rep.max_gauge == Rat(2));
  CHECK(rep.argmax_vertices.size() == 3);  // exactly the vertices

  const auto sq = star_p_check(poly("p1xp1"), rays("p1xp1"));
  CHECK(sq.max_gauge == Rat(1));
  REQUIRE(sq.flat_edge.has_value());
  CHECK(gauge_neg_p(rays("p1xp1"),
                    r(1, 2) * (sq.flat_edge_points[0] + sq.flat_edge_points[1])) == Rat(1));
}

TEST_CASE("star_p argmax details on the blow-ups") {
  // One-point blow-up: the max level touches P at the two uncut vertices.
  const auto rep1 = star_p_check(poly("dp1"), rays("dp1"));
  CHECK(rep1.max_gauge == Rat(2));
  CHECK(rep1.argmax_vertices ==
        std::vector<RatVec>{RatVec{Rat(-1), Rat(2)}, RatVec{Rat(2), Rat(-1)}});
  // Two-point blow-up: only the vertex (-1,-1) remains at the max level.
  const auto rep2 = star_p_check(poly("dp2"), rays("dp2"));
  CHECK(rep2.max_gauge == Rat(2));
  CHECK(rep2.argmax_vertices == std::vector<RatVec>{RatVec{Rat(-1), Rat(-1)}});
}

TEST_CASE("stabilization verdicts") {
  {
    const auto rep = stabilization_report(poly("p2"), rays("p2"), 2);
    CHECK(rep.verdict == StabilizationVerdict::StrictForAllK);
    CHECK(rep.alpha == r(1, 3));
    for (const auto& [k, v] : rep.samples) CHECK(v > rep.alpha);
  }
  {
    const auto rep = stabilization_report(poly("p1xp1"), rays("p1xp1"), 2);
    CHECK(rep.verdict == StabilizationVerdict::StabilizesEventually);
    CHECK(rep.k1 >= 1);
    CHECK(alpha_km(poly("p1xp1"), rays("p1xp1"), rep.k1, 2).value == r(1, 2));
  }
  {
    const auto rep = stabilization_report(poly("dp3"), rays("dp3"), 1);
    CHECK(rep.verdict == StabilizationVerdict::StabilizesAllK);
    CHECK(rep.k1 == 1);
  }
}

TEST_CASE("k_zero") {
  const Polytope p2 = poly("p2");
  const FiniteGroup swap = subgroup_closure(std::vector{mat2(0, 1, 1, 0)},
                                            automorphism_group(p2));
  {
    const auto kz = k_zero(p2, rays("p2"), swap);
    CHECK(kz.k0 == Int(1));
    CHECK(kz.u0 == RatVec{Rat(-1), Rat(-1)});
  }
  {
    const auto kz = k_zero(poly("dp1"), rays("dp1"), automorphism_group(poly("dp1")));
    CHECK(kz.k0 == Int(2));
    CHECK(denominator_lcm(kz.u0) == Int(2));
  }
  for (const char* name : {"p2", "dp1", "dp2", "dp3", "p1xp1"}) {
    CHECK(k_zero(poly(name), rays(name), trivial_group(2)).k0 == Int(1));
  }
}

TEST_CASE("lct of monomial sections") {
  CHECK(lct_monomial(rays("p2"), RatVec(2), 1) == Rat(1));
  CHECK(lct_monomial(rays("p2"), RatVec(2), 4) == r(1, 4));
  CHECK(lct_monomial(rays("p2"), RatVec{Rat(2), Rat(-1)}, 1) == r(1, 3));
  CHECK(lct_monomial(rays("p2"), RatVec{r(1, 2), r(1, 2)}, 2) == r(1, 3));
  CHECK_THROWS_AS(lct_monomial(rays("p2"), RatVec{Rat(3), Rat(0)}, 1), PreconditionError);
  CHECK_THROWS_AS(lct_monomial(rays("p2"), RatVec{r(1, 2), r(1, 2)}, 3), PreconditionError);
}

TEST_CASE("symmetry bound classification across the catalog") {
  for (const auto& entry : catalog()) {
    const Polytope p = Polytope::anticanonical(entry.rays);
    const auto sb = symmetry_alpha_bound(p, entry.rays);  // throws if a bound fails
    CHECK(sb.alpha <= r(1, 2));
    if (!sb.centrally_symmetric) CHECK(sb.alpha <= r(1, 3));
  }
  CHECK(symmetry_alpha_bound(poly("p1xp1"), rays("p1xp1")).alpha == r(1, 2));
  CHECK(symmetry_alpha_bound(poly("dp3"), rays("dp3")).alpha == r(1, 2));
  CHECK(symmetry_alpha_bound(poly("p2"), rays("p2")).alpha == r(1, 3));
  CHECK(symmetry_alpha_bound(poly("p1cubed"), rays("p1cubed")).alpha == r(1, 2));
  CHECK(symmetry_alpha_bound(poly("p3"), rays("p3")).alpha == r(1, 4));
}
