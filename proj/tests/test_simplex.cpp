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

#include <algorithm>
#include <random>

#include "toric/simplex.hpp"

using namespace toric;

TEST_CASE("one-variable programs") {
  LinearProgram lp;
  lp.sense = Sense::Maximize;
  lp.objective = RatVec{Rat(1)};
  lp.lower_bounds = {Rat(0)};

  SUBCASE("bounded above") {
    lp.le_rows.emplace_back(RatVec{Rat(1)}, Rat(1));
    const auto out = solve(lp);
    REQUIRE(out.status == LpStatus::Optimal);
    CHECK(out.value == Rat(1));
    CHECK(out.point == RatVec{Rat(1)});
    CHECK(certificate_ok(lp, out));
  }
  SUBCASE("no upper bound") {
    CHECK(solve(lp).status == LpStatus::Unbounded);
  }
  SUBCASE("infeasible") {
    lp.le_rows.emplace_back(RatVec{Rat(1)}, Rat(-1));
    CHECK(solve(lp).status == LpStatus::Infeasible);
  }
}

TEST_CASE("tight facet") {
  LinearProgram lp;
  lp.sense = Sense::Maximize;
  lp.objective = RatVec{Rat(1), Rat(1)};
  lp.lower_bounds = {Rat(0), Rat(0)};
  lp.le_rows.emplace_back(RatVec{Rat(1), Rat(1)}, Rat(1));
  const auto out = solve(lp);
  REQUIRE(out.status == LpStatus::Optimal);
  CHECK(out.value == Rat(1));
  CHECK(certificate_ok(lp, out));
}

// min t over the segment from (2,-1) to (-1,2) of the largest pairing with
// {(1,0),(0,1),(-1,-1)}; the midpoint (1/2,1/2) gives 1/2.
TEST_CASE("gauge minimization over a segment") {
  LinearProgram lp;
  lp.sense = Sense::Minimize;
  lp.objective = RatVec{Rat(0), Rat(0), Rat(1)};
  lp.lower_bounds = {Rat(0), Rat(0), std::nullopt};
  lp.eq_rows.emplace_back(RatVec{Rat(1), Rat(1), Rat(0)}, Rat(1));
  // x = l1*(2,-1) + l2*(-1,2); <x, v> <= t for the three v.
  lp.le_rows.emplace_back(RatVec{Rat(2), Rat(-1), Rat(-1)}, Rat(0));
  lp.le_rows.emplace_back(RatVec{Rat(-1), Rat(2), Rat(-1)}, Rat(0));
  lp.le_rows.emplace_back(RatVec{Rat(-1), Rat(-1), Rat(-1)}, Rat(0));
  const auto out = solve(lp);
  REQUIRE(out.status == LpStatus::Optimal);
  CHECK(out.value == make_rat(Int(1), Int(2)));
  CHECK(out.point[0] == make_rat(Int(1), Int(2)));
  CHECK(out.point[1] == make_rat(Int(1), Int(2)));
  CHECK(certificate_ok(lp, out));
}

TEST_CASE("free variables and minimization duals") {
  // min x + y s.t. x + y >= 1 (as -x - y <= -1), x free, y >= 0.
  LinearProgram lp;
  lp.sense = Sense::Minimize;
  lp.objective = RatVec{Rat(1), Rat(1)};
  lp.lower_bounds = {std::nullopt, Rat(0)};
  lp.le_rows.emplace_back(RatVec{Rat(-1), Rat(-1)}, Rat(-1));
  const auto out = solve(lp);
  REQUIRE(out.status == LpStatus::Optimal);
  CHECK(out.value == Rat(1));
  CHECK(certificate_ok(lp, out));
  CHECK(out.le_multipliers[0] <= 0);  // minimization sign convention
}

TEST_CASE("pivot ceiling fails loudly") {
  LinearProgram lp;
  lp.sense = Sense::Maximize;
  lp.objective = RatVec{Rat(1), Rat(1), Rat(1)};
  lp.lower_bounds = {Rat(0), Rat(0), Rat(0)};
  lp.le_rows.emplace_back(RatVec{Rat(1), Rat(2), Rat(1)}, Rat(5));
  lp.le_rows.emplace_back(RatVec{Rat(2), Rat(1), Rat(3)}, Rat(7));
  lp.pivot_ceiling = 1;
  CHECK_THROWS_AS(solve(lp), PivotLimitError);
}

namespace {

// A random bounded feasible program: box-bounded variables plus rows chosen
// feasible at a random interior point.
LinearProgram random_lp(std::mt19937_64& rng) {
  const std::size_t n = 2 + rng() % 3;
  LinearProgram lp;
  lp.sense = rng() % 2 ? Sense::Maximize : Sense::Minimize;
  lp.objective = RatVec(n);
  lp.lower_bounds.assign(n, Rat(0));
  for (std::size_t j = 0; j < n; ++j) lp.objective[j] = Rat(long(rng() % 11) - 5);
  for (std::size_t j = 0; j < n; ++j) {
    RatVec row(n);
    row[j] = 1;
    lp.le_rows.emplace_back(std::move(row), Rat(1 + long(rng() % 3)));
  }
  RatVec x0(n);
  for (std::size_t j = 0; j < n; ++j) x0[j] = make_rat(Int(rng() % 3), Int(3));
  for (int r = 0; r < 3; ++r) {
    RatVec row(n);
    for (std::size_t j = 0; j < n; ++j) row[j] = Rat(long(rng() % 7) - 3);
    lp.le_rows.emplace_back(row, dot(row, x0) + Rat(long(rng() % 3)));
  }
  return lp;
}

}  // namespace

TEST_CASE("row and column permutations preserve the optimal value") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    LinearProgram lp = random_lp(rng);
    const auto base = solve(lp);
    REQUIRE(base.status == LpStatus::Optimal);
    CHECK(certificate_ok(lp, base));

    LinearProgram shuffled = lp;
    std::shuffle(shuffled.le_rows.begin(), shuffled.le_rows.end(), rng);
    const std::size_t n = lp.num_vars();
    std::vector<std::size_t> perm(n);
    for (std::size_t j = 0; j < n; ++j) perm[j] = j;
    std::shuffle(perm.begin(), perm.end(), rng);
    LinearProgram permuted;
    permuted.sense = shuffled.sense;
    permuted.objective = RatVec(n);
    permuted.lower_bounds.assign(n, Rat(0));
    for (std::size_t j = 0; j < n; ++j) permuted.objective[perm[j]] = shuffled.objective[j];
    for (const auto& [row, rhs] : shuffled.le_rows) {
      RatVec prow(n);
      for (std::size_t j = 0; j < n; ++j) prow[perm[j]] = row[j];
      permuted.le_rows.emplace_back(std::move(prow), rhs);
    }
    const auto out = solve(permuted);
    REQUIRE(out.status == LpStatus::Optimal);
    CHECK(out.value == base.value);
  }
}
