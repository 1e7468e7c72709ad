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

#include "toric/simplex.hpp"

#include <algorithm>
#include <limits>

namespace toric {

namespace {

enum class ColKind { Shifted, FreePos, FreeNeg, Slack, Artificial };

struct Column {
  ColKind kind;
  std::size_t index;  // variable index, or le-row index for slacks, row for artificials
};

// Standard form: minimize cost . z  s.t.  A z = b, z >= 0, b >= 0.
struct Standard {
  std::vector<Column> cols;
  std::vector<std::vector<Rat>> A;  // rows x cols (pristine, never pivoted)
  std::vector<Rat> b;
  std::vector<Rat> cost;            // internal minimization costs
  std::vector<int> sigma;           // +1/-1 row sign applied to reach b >= 0
  std::size_t n_eq = 0, n_le = 0;
  std::size_t art_begin = 0;        // == cols.size() before artificials are added
};

void validate(const LinearProgram& lp) {
  const std::size_t n = lp.num_vars();
  if (lp.lower_bounds.size() != n)
    throw DimensionMismatch("LinearProgram: lower_bounds size != objective size");
  for (const auto& [a, b] : lp.eq_rows)
    if (a.dim() != n) throw DimensionMismatch("LinearProgram: eq row dimension");
  for (const auto& [a, b] : lp.le_rows)
    if (a.dim() != n) throw DimensionMismatch("LinearProgram: le row dimension");
}

Standard build_standard(const LinearProgram& lp) {
  const std::size_t n = lp.num_vars();
  const Rat obj_factor = lp.sense == Sense::Maximize ? Rat(-1) : Rat(1);

  Standard s;
  s.n_eq = lp.eq_rows.size();
  s.n_le = lp.le_rows.size();

  // Column layout: per-variable columns first, then slacks.
  std::vector<std::vector<std::size_t>> var_cols(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (lp.lower_bounds[j]) {
      var_cols[j] = {s.cols.size()};
      s.cols.push_back({ColKind::Shifted, j});
    } else {
      var_cols[j] = {s.cols.size(), s.cols.size() + 1};
      s.cols.push_back({ColKind::FreePos, j});
      s.cols.push_back({ColKind::FreeNeg, j});
    }
  }
  for (std::size_t i = 0; i < s.n_le; ++i) s.cols.push_back({ColKind::Slack, i});
  s.art_begin = s.cols.size();

  const std::size_t m = s.n_eq + s.n_le;
  s.A.assign(m, std::vector<Rat>(s.cols.size()));
  s.b.assign(m, Rat(0));
  s.sigma.assign(m, 1);

  auto fill_row = [&](std::size_t r, const RatVec& a, const Rat& rhs) {
    Rat shift = rhs;
    for (std::size_t j = 0; j < n; ++j) {
      if (a[j] == 0) continue;
      if (lp.lower_bounds[j]) {
        s.A[r][var_cols[j][0]] = a[j];
        shift -= a[j] * *lp.lower_bounds[j];
      } else {
        s.A[r][var_cols[j][0]] = a[j];
        s.A[r][var_cols[j][1]] = -a[j];
      }
    }
    s.b[r] = shift;
  };

  for (std::size_t i = 0; i < s.n_eq; ++i) fill_row(i, lp.eq_rows[i].first, lp.eq_rows[i].second);
  for (std::size_t i = 0; i < s.n_le; ++i) {
    const std::size_t r = s.n_eq + i;
    fill_row(r, lp.le_rows[i].first, lp.le_rows[i].second);
    s.A[r][s.art_begin - s.n_le + i] = 1;  // slack
  }

  for (std::size_t r = 0; r < m; ++r) {
    if (s.b[r] < 0) {
      s.sigma[r] = -1;
      s.b[r] = -s.b[r];
      for (auto& e : s.A[r]) e = -e;
    }
  }

  s.cost.assign(s.cols.size(), Rat(0));
  for (std::size_t j = 0; j < n; ++j) {
    const Rat c = obj_factor * lp.objective[j];
    if (c == 0) continue;
    if (lp.lower_bounds[j]) {
      s.cost[var_cols[j][0]] = c;
    } else {
      s.cost[var_cols[j][0]] = c;
      s.cost[var_cols[j][1]] = -c;
    }
  }
  return s;
}

struct Tableau {
  std::vector<std::vector<Rat>> T;  // m x (ncols + 1); last column is rhs
  std::vector<std::size_t> basis;   // per row
  std::vector<Rat> red;             // ncols + 1 reduced costs; last cell unused here
  std::size_t ncols = 0;
  long pivots = 0;
  long ceiling = 0;
};

void recompute_reduced(Tableau& t, const std::vector<Rat>& cost) {
  const std::size_t m = t.T.size();
  t.red.assign(t.ncols + 1, Rat(0));
  for (std::size_t j = 0; j <= t.ncols; ++j) {
    Rat r = j < t.ncols ? cost[j] : Rat(0);
    for (std::size_t i = 0; i < m; ++i) {
      const Rat& cb = cost[t.basis[i]];
      if (cb != 0 && t.T[i][j] != 0) r -= cb * t.T[i][j];
    }
    t.red[j] = r;
  }
}

void pivot(Tableau& t, std::size_t row, std::size_t col) {
  if (++t.pivots > t.ceiling)
    throw PivotLimitError("simplex: pivot ceiling exceeded (" + std::to_string(t.ceiling) + ")");
  auto& R = t.T[row];
  const Rat p = R[col];
  for (auto& e : R) e /= p;
  for (std::size_t i = 0; i < t.T.size(); ++i) {
    if (i == row || t.T[i][col] == 0) continue;
    const Rat f = t.T[i][col];
    for (std::size_t j = 0; j <= t.ncols; ++j)
      if (R[j] != 0) t.T[i][j] -= f * R[j];
    t.T[i][col] = 0;  // keep the column exactly clean
  }
  if (t.red[col] != 0) {
    const Rat f = t.red[col];
    for (std::size_t j = 0; j <= t.ncols; ++j)
      if (R[j] != 0) t.red[j] -= f * R[j];
    t.red[col] = 0;
  }
  t.basis[row] = col;
}

// Runs simplex iterations until optimality or unboundedness.
// Entering: lowest-index non-artificial column with negative reduced cost.
// Leaving: Bland among minimum-ratio rows. Rows whose basic variable is a
// zero-valued artificial block the entering column via a degenerate pivot,
// which keeps artificials at zero and drives them out of the basis.
// Returns false on unboundedness.
bool iterate(Tableau& t, std::size_t art_begin) {
  const std::size_t m = t.T.size();
  for (;;) {
    std::size_t enter = t.ncols;
    for (std::size_t j = 0; j < art_begin; ++j) {
      if (t.red[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == t.ncols) return true;  // optimal

    // Zero-valued basic artificials must not move; pivot them out first.
    std::size_t forced = m;
    for (std::size_t i = 0; i < m; ++i) {
      if (t.basis[i] >= art_begin && t.T[i][t.ncols] == 0 && t.T[i][enter] != 0) {
        if (forced == m || t.basis[i] < t.basis[forced]) forced = i;
      }
    }
    if (forced != m) {
      pivot(t, forced, enter);
      continue;
    }

    std::size_t leave = m;
    Rat best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (t.T[i][enter] <= 0) continue;
      const Rat ratio = t.T[i][t.ncols] / t.T[i][enter];
      if (leave == m || ratio < best_ratio ||
          (ratio == best_ratio && t.basis[i] < t.basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == m) return false;  // unbounded
    pivot(t, leave, enter);
  }
}

}  // namespace

LpOutcome solve(const LinearProgram& lp) {
  validate(lp);
  Standard s = build_standard(lp);
  const std::size_t m = s.A.size();
  const std::size_t real_cols = s.cols.size();

  Tableau t;
  t.ncols = real_cols + m;  // artificials appended
  t.ceiling = lp.pivot_ceiling > 0 ? lp.pivot_ceiling : 10 * long(m + t.ncols);
  t.T.assign(m, std::vector<Rat>(t.ncols + 1));
  t.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < real_cols; ++j) t.T[i][j] = s.A[i][j];
    t.T[i][real_cols + i] = 1;
    t.T[i][t.ncols] = s.b[i];
    t.basis[i] = real_cols + i;
  }

  // Phase 1: minimize the sum of artificials.
  std::vector<Rat> phase1_cost(t.ncols, Rat(0));
  for (std::size_t j = real_cols; j < t.ncols; ++j) phase1_cost[j] = 1;
  recompute_reduced(t, phase1_cost);
  iterate(t, real_cols);  // bounded below by zero, cannot be unbounded

  Rat infeas = 0;
  for (std::size_t i = 0; i < m; ++i)
    if (t.basis[i] >= real_cols) infeas += t.T[i][t.ncols];
  LpOutcome out;
  out.pivots = t.pivots;
  if (infeas != 0) {
    out.status = LpStatus::Infeasible;
    return out;
  }

  // Phase 2. Artificials keep cost zero and stay excluded from entering;
  // any still basic are pinned at zero by the forced-pivot rule.
  std::vector<Rat> phase2_cost(t.ncols, Rat(0));
  for (std::size_t j = 0; j < real_cols; ++j) phase2_cost[j] = s.cost[j];
  recompute_reduced(t, phase2_cost);
  const bool bounded = iterate(t, real_cols);
  out.pivots = t.pivots;
  if (!bounded) {
    out.status = LpStatus::Unbounded;
    return out;
  }

  // Recover the point in original variables.
  std::vector<Rat> z(t.ncols, Rat(0));
  for (std::size_t i = 0; i < m; ++i) z[t.basis[i]] = t.T[i][t.ncols];
  const std::size_t n = lp.num_vars();
  RatVec x(n);
  {
    std::size_t col = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (lp.lower_bounds[j]) {
        x[j] = *lp.lower_bounds[j] + z[col];
        col += 1;
      } else {
        x[j] = z[col] - z[col + 1];
        col += 2;
      }
    }
  }
  out.status = LpStatus::Optimal;
  out.point = x;
  out.value = dot(lp.objective, x);

  // Dual multipliers: solve B^T y = cost_B against the pristine columns
  // (artificial column r is the unit vector e_r).
  RatMat Bt(m, m);
  RatVec cb(m);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t col = t.basis[i];
    for (std::size_t r = 0; r < m; ++r)
      Bt(i, r) = col < real_cols ? s.A[r][col] : Rat(col - real_cols == r ? 1 : 0);
    cb[i] = col < real_cols ? s.cost[col] : Rat(0);
  }
  auto y = solve_linear(Bt, cb);
  if (!y) throw Error("simplex: basis matrix unexpectedly singular");

  const Rat obj_factor = lp.sense == Sense::Maximize ? Rat(-1) : Rat(1);
  out.eq_multipliers = RatVec(s.n_eq);
  out.le_multipliers = RatVec(s.n_le);
  for (std::size_t r = 0; r < m; ++r) {
    const Rat mult = obj_factor * Rat(s.sigma[r]) * (*y)[r];
    if (r < s.n_eq)
      out.eq_multipliers[r] = mult;
    else
      out.le_multipliers[r - s.n_eq] = mult;
  }
  if (!certificate_ok(lp, out)) throw Error("simplex: dual certificate failed verification");
  return out;
}

bool certificate_ok(const LinearProgram& lp, const LpOutcome& out) {
  if (out.status != LpStatus::Optimal) return false;
  const std::size_t n = lp.num_vars();
  if (out.eq_multipliers.dim() != lp.eq_rows.size()) return false;
  if (out.le_multipliers.dim() != lp.le_rows.size()) return false;

  // Sign convention: le multipliers >= 0 for Maximize, <= 0 for Minimize;
  // bound multipliers (derived below) follow the same sign.
  const bool maximize = lp.sense == Sense::Maximize;
  for (const auto& w : out.le_multipliers) {
    if (maximize ? w < 0 : w > 0) return false;
  }

  // Stationarity: c = E^T y + A^T w - z, with z supported on bounded variables.
  RatVec aty(n);
  for (std::size_t i = 0; i < lp.eq_rows.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) aty[j] += out.eq_multipliers[i] * lp.eq_rows[i].first[j];
  for (std::size_t i = 0; i < lp.le_rows.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) aty[j] += out.le_multipliers[i] * lp.le_rows[i].first[j];

  Rat dual_value = 0;
  for (std::size_t i = 0; i < lp.eq_rows.size(); ++i)
    dual_value += out.eq_multipliers[i] * lp.eq_rows[i].second;
  for (std::size_t i = 0; i < lp.le_rows.size(); ++i)
    dual_value += out.le_multipliers[i] * lp.le_rows[i].second;

  for (std::size_t j = 0; j < n; ++j) {
    const Rat z = aty[j] - lp.objective[j];
    if (!lp.lower_bounds[j]) {
      if (z != 0) return false;
    } else {
      if (maximize ? z < 0 : z > 0) return false;
      dual_value -= z * *lp.lower_bounds[j];
    }
  }
  return dual_value == out.value;
}

}  // namespace toric
