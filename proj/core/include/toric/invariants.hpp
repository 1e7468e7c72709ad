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

#include <optional>
#include <span>
#include <vector>

#include "toric/polytope.hpp"
#include "toric/symmetry.hpp"

namespace toric {

enum class FormulaPath { VertexFormula, OrbitFormula, SubsetSearch };

const char* formula_path_name(FormulaPath p);

/// An exact invariant value in (0, 1] plus the witness explaining it.
struct AlphaValue {
  Rat value;
  RatVec witness_point;               // vertex/orbit paths: a minimizing u
  std::vector<RatVec> witness_subset; // subset search: a maximizing F
  FormulaPath path = FormulaPath::VertexFormula;
  long k = 0;
  long m = 0;  // 0 when not applicable
  std::size_t group_order = 1;
};

struct SearchStats {
  long nodes = 0;
  long pruned = 0;
  long lp_calls = 0;
};

/// alpha_{k,G(H)} = min over u in pi_H(Ver P) of 1/(1 + max_i <u, v_i>).
/// Independent of k (which is recorded in the result, not used).
AlphaValue alpha_kG(const Polytope& p, const FanRays& rays, const FiniteGroup& h, long k);

/// Same number through the orbit decomposition of (1/k)M n P:
/// min over orbits of 1/(1 + ||pi_H(rep)||_{-P}).
AlphaValue alpha_via_orbits(const Polytope& p, const FanRays& rays, const FiniteGroup& h, long k);

/// c_k(F) = 1/(1 + min over conv F of ||.||_{-P}), by the gauge-minimization
/// LP. Every point of f must lie in p.
Rat c_k_subset(const Polytope& p, std::span<const RatVec> f);

/// The general singularity exponent c(F, U) in (0, 1]: the largest c with
/// 0 in (1-c) conv U + c conv F; equals 1 when 0 in conv F. Requires the
/// origin interior to conv U.
Rat c_general(std::span<const RatVec> f, std::span<const RatVec> u);

/// Grassmannian invariant alpha_{k,m,(S^1)^n} by branch-and-bound over
/// m-subsets of (1/k)M n P. Throws NoInvariantSubspaceError when m > E_P(k).
/// The value is independent of `threads`; the witness is recomputed along a
/// deterministic scan after the value is known.
AlphaValue alpha_km(const Polytope& p, const FanRays& rays, long k, long m, int threads = 1,
                    SearchStats* stats = nullptr);

/// Condition (*_P): the gauge ||.||_{-P} attains its maximum over P only at
/// vertices. Failure is witnessed by an edge on which the gauge is constant
/// at the maximum (checked exactly via the midpoint).
struct StarPReport {
  bool holds = false;
  Rat max_gauge;  // lambda* = max over Ver P
  std::vector<RatVec> argmax_vertices;
  std::optional<Edge> flat_edge;
  std::vector<RatVec> flat_edge_points;  // the two endpoints, when present
};

StarPReport star_p_check(const Polytope& p, const FanRays& rays);

enum class StabilizationVerdict {
  StabilizesAllK,        // m == 1: alpha_{k,m} = alpha for every k
  StrictForAllK,         // (*_P) holds, m >= 2: alpha_{k,m} > alpha for all k
  StabilizesEventually,  // (*_P) fails: alpha_{k,m} = alpha for all large k
};

const char* stabilization_verdict_name(StabilizationVerdict v);

struct StabilizationReport {
  StabilizationVerdict verdict = StabilizationVerdict::StabilizesAllK;
  long m = 1;
  Rat alpha;  // the stable value alpha_{(S^1)^n}
  StarPReport star;
  /// Least k with alpha_{k,m} = alpha_{k+1,m} = alpha_{k+2,m} = alpha
  /// (StabilizesEventually), or 1 (StabilizesAllK); 0 for StrictForAllK.
  long k1 = 0;
  std::vector<std::pair<long, Rat>> samples;  // small alpha_{k,m} evidence table
};

StabilizationReport stabilization_report(const Polytope& p, const FanRays& rays, long m);

/// The divisibility threshold: u0 is an alpha-minimizing projected vertex
/// (ties: least denominator lcm, then lexicographic), k0 = denominator_lcm(u0).
struct KZeroResult {
  Int k0;
  RatVec u0;
};

KZeroResult k_zero(const Polytope& p, const FanRays& rays, const FiniteGroup& h);

/// lct of the monomial section indexed by u in P n (1/k)M:
/// (1/k) * 1/(1 + max_i <u, v_i>).
Rat lct_monomial(const FanRays& rays, const RatVec& u, long k);

/// Central-symmetry classification with the alpha bounds: alpha <= 1/2,
/// equality iff P = -P, and alpha <= 1/3 otherwise. Violations throw.
struct SymmetryBound {
  bool centrally_symmetric = false;
  Rat alpha;
};

SymmetryBound symmetry_alpha_bound(const Polytope& p, const FanRays& rays);

/// Gauge with respect to -P, i.e. max_i <x, v_i> for anticanonical P.
Rat gauge_neg_p(const FanRays& rays, const RatVec& x);

/// Validates h <= Aut P by checking that every element permutes Ver P.
void require_subgroup_of_aut(const FiniteGroup& h, const Polytope& p);

}  // namespace toric
