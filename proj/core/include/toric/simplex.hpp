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
#include <utility>
#include <vector>

#include "toric/rational.hpp"

namespace toric {

enum class Sense { Minimize, Maximize };
enum class LpStatus { Optimal, Infeasible, Unbounded };

/// A small dense LP over exact rationals.
///
/// Variables x_0..x_{n-1}; each may carry a lower bound (nullopt = free).
/// Rows are <a, x> == b and <a, x> <= b.
struct LinearProgram {
  Sense sense = Sense::Maximize;
  RatVec objective;
  std::vector<std::pair<RatVec, Rat>> eq_rows;
  std::vector<std::pair<RatVec, Rat>> le_rows;
  std::vector<std::optional<Rat>> lower_bounds;
  /// 0 means the default of 10 * (standard-form rows + cols).
  long pivot_ceiling = 0;

  std::size_t num_vars() const { return objective.dim(); }
};

struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  Rat value;    // meaningful when Optimal
  RatVec point; // meaningful when Optimal; a basic feasible solution

  // Dual certificate (row multipliers), produced on every optimal solve and
  // verified exactly before returning. For Maximize the le multipliers are
  // >= 0; for Minimize they are <= 0.
  RatVec eq_multipliers;
  RatVec le_multipliers;

  long pivots = 0;
};

/// Two-phase dense simplex with Bland's anti-cycling rule; everything exact.
/// Throws PivotLimitError if the pivot count exceeds the ceiling.
LpOutcome solve(const LinearProgram& lp);

/// Checks the weak-duality certificate of an Optimal outcome against the
/// original program: dual feasibility and exact objective match.
bool certificate_ok(const LinearProgram& lp, const LpOutcome& out);

}  // namespace toric
