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
#include <vector>

#include "toric/invariants.hpp"
#include "toric/polytope.hpp"

namespace toric {

enum class Membership { Interior, Boundary, Outside };

/// Exact three-way classification of x against conv(points) by LP: membership
/// first, then maximal motion along every +-coordinate direction.
Membership interior_membership(const RatVec& x, std::span<const RatVec> points);

/// A certified bracket: the true threshold lies in [lower, upper], and
/// upper - lower = 2^-iterations. Endpoints are dyadic rationals.
struct BisectionResult {
  Rat lower;
  Rat upper;
  int iterations = 0;
};

/// Bisects c over (0,1) on the predicate "origin interior to
/// c conv(F) + (1-c) conv(U)", the Minkowski combination represented by its
/// pairwise vertex sums. Requires the origin interior to conv(U).
BisectionResult c_star_bisection(std::span<const RatVec> f, std::span<const RatVec> u,
                                 int iterations);

/// Exhaustive alpha_{k,m} over all m-subsets; no pruning holes possible. Uses
/// its own fraction-free evaluator, independent of the rational simplex path.
/// Throws CeilingExceededError when C(E_P(k), m) exceeds the ceiling.
AlphaValue alpha_km_bruteforce(const Polytope& p, const FanRays& rays, long k, long m,
                               long ceiling = 2'000'000);

struct EhrhartFitReport {
  bool pass = false;
  std::vector<Rat> coefficients;  // degree 0..n of the interpolated polynomial
  Rat volume;                     // independent triangulation volume
  std::vector<Int> counts;        // E_P(1..kmax)
  std::string detail;
};

/// Fits the degree-n polynomial through E_P(1..n+1), then demands exact
/// prediction of E_P(n+2..kmax) and leading coefficient == Vol(P).
EhrhartFitReport ehrhart_fit_check(const Polytope& p, long kmax);

/// Exact volume by pulling triangulation of the face lattice.
Rat volume(const Polytope& p);

}  // namespace toric
