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

#include "toric/invariants.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "toric/oracle.hpp"
#include "toric/simplex.hpp"

namespace toric {

const char* formula_path_name(FormulaPath p) {
  switch (p) {
    case FormulaPath::VertexFormula: return "vertex-formula";
    case FormulaPath::OrbitFormula: return "orbit-formula";
    case FormulaPath::SubsetSearch: return "subset-search";
  }
  return "?";
}

const char* stabilization_verdict_name(StabilizationVerdict v) {
  switch (v) {
    case StabilizationVerdict::StabilizesAllK: return "stabilizes-all-k";
    case StabilizationVerdict::StrictForAllK: return "strict";
    case StabilizationVerdict::StabilizesEventually: return "stabilizes";
  }
  return "?";
}

Rat gauge_neg_p(const FanRays& rays, const RatVec& x) {
  Rat best = 0;
  for (const auto& v : rays.rays) best = std::max(best, dot(x, v));
  return best;
}

void require_subgroup_of_aut(const FiniteGroup& h, const Polytope& p) {
  if (h.dim != p.dim()) throw DimensionMismatch("group/polytope dimension mismatch");
  if (!preserves(h, p))
    throw PreconditionError("group is not a subgroup of Aut P (some element moves Ver P)");
}

AlphaValue alpha_kG(const Polytope& p, const FanRays& rays, const FiniteGroup& h, long k) {
  require_subgroup_of_aut(h, p);
  const auto candidates = fixed_polytope_vertices(h, p);
  AlphaValue out;
  out.path = FormulaPath::VertexFormula;
  out.k = k;
  out.group_order = h.order();
  bool first = true;
  for (const auto& u : candidates) {
    const Rat value = Rat(1) / (Rat(1) + gauge_neg_p(rays, u));
    if (first || value < out.value || (value == out.value && u < out.witness_point)) {
      out.value = value;
      out.witness_point = u;
      first = false;
    }
  }
  return out;
}

AlphaValue alpha_via_orbits(const Polytope& p, const FanRays& rays, const FiniteGroup& h,
                            long k) {
  require_subgroup_of_aut(h, p);
  const auto dec = orbit_decomposition(h, p, k);
  AlphaValue out;
  out.path = FormulaPath::OrbitFormula;
  out.k = k;
  out.group_order = h.order();
  bool first = true;
  for (const auto& rep : dec.representatives) {
    const RatVec u = project_pi_H(h, rep);
    const Rat value = Rat(1) / (Rat(1) + gauge_neg_p(rays, u));
    if (first || value < out.value || (value == out.value && u < out.witness_point)) {
      out.value = value;
      out.witness_point = u;
      first = false;
    }
  }
  return out;
}

namespace {

// min over conv(f) of the gauge ||.||_{-P}, as an LP in (lambda, t).
Rat min_gauge_over_hull(const Polytope& p, std::span<const RatVec> f) {
  const std::size_t s = f.size();
  LinearProgram lp;
  lp.sense = Sense::Minimize;
  lp.objective = RatVec(s + 1);
  lp.objective[s] = 1;
  lp.lower_bounds.assign(s, Rat(0));
  lp.lower_bounds.push_back(std::nullopt);  // t free
  {
    RatVec conv(s + 1);
    for (std::size_t i = 0; i < s; ++i) conv[i] = 1;
    lp.eq_rows.emplace_back(std::move(conv), Rat(1));
  }
  for (const auto& h : p.halfspaces()) {
    RatVec row(s + 1);
    for (std::size_t i = 0; i < s; ++i) row[i] = -dot(f[i], h.normal);
    row[s] = -h.rhs;
    lp.le_rows.emplace_back(std::move(row), Rat(0));
  }
  const auto out = solve(lp);
  if (out.status != LpStatus::Optimal) throw Error("gauge minimization LP did not solve");

  return out.value;
}

}  // namespace

Rat c_k_subset(const Polytope& p, std::span<const RatVec> f) {
  if (f.empty()) throw PreconditionError("c_k_subset: empty subset");
  if (!p.origin_interior()) throw PreconditionError("c_k_subset: origin not interior to P");
  for (const auto& x : f)
    if (!p.contains(x))
      throw PreconditionError("c_k_subset: point " + vec_to_string(x) + " is outside P");
  return Rat(1) / (Rat(1) + min_gauge_over_hull(p, f));
}

Rat c_general(std::span<const RatVec> f, std::span<const RatVec> u) {
  if (f.empty() || u.empty()) throw PreconditionError("c_general: empty point set");
  if (interior_membership(RatVec(f[0].dim()), u) != Membership::Interior)
    throw PreconditionError("c_general: origin not interior to conv U");
  const std::size_t n = f[0].dim();

  // maximize sum(y) s.t. sum y_i f_i + sum mu_j u_j = 0, sum mu_j = 1.
  LinearProgram lp;
  lp.sense = Sense::Maximize;
  lp.objective = RatVec(f.size() + u.size());
  for (std::size_t i = 0; i < f.size(); ++i) lp.objective[i] = 1;
  lp.lower_bounds.assign(f.size() + u.size(), Rat(0));
  for (std::size_t r = 0; r < n; ++r) {
    RatVec row(f.size() + u.size());
    for (std::size_t i = 0; i < f.size(); ++i) row[i] = f[i][r];
    for (std::size_t j = 0; j < u.size(); ++j) row[f.size() + j] = u[j][r];
    lp.eq_rows.emplace_back(std::move(row), Rat(0));
  }
  {
    RatVec row(f.size() + u.size());
    for (std::size_t j = 0; j < u.size(); ++j) row[f.size() + j] = 1;
    lp.eq_rows.emplace_back(std::move(row), Rat(1));
  }
  const auto out = solve(lp);
  if (out.status == LpStatus::Unbounded) return Rat(1);  // 0 in conv F
  if (out.status != LpStatus::Optimal) throw Error("c_general: LP infeasible");
  return out.value / (Rat(1) + out.value);
}

namespace {

struct SubsetSearch {
  const Polytope& p;
  std::vector<RatVec> points;  // sorted by gauge desc, then lex
  std::vector<Rat> gauges;     // aligned with points
  long m;
  std::atomic<long> nodes{0};
  std::atomic<long> pruned{0};
  std::atomic<long> lp_calls{0};

  Rat incumbent = -1;
  std::mutex mu;

  Rat mu_of(std::span<const RatVec> subset) {
    ++lp_calls;
    return min_gauge_over_hull(p, subset);
  }

  Rat read_incumbent() {
    std::scoped_lock lock(mu);
    return incumbent;
  }
  void offer(const Rat& v) {
    std::scoped_lock lock(mu);
    if (v > incumbent) incumbent = v;
  }

  // Explores completions of `chosen` (indices into points, increasing) with
  // candidates from `start`. Prunes against the shared incumbent; pruning
  // bounds are exact: mu(F) <= mu(S) for S subset of F, and
  // mu(F) <= gauge of any member.
  void dfs(std::vector<std::size_t>& chosen, std::size_t start,
           std::vector<RatVec>& chosen_pts) {
    if (long(chosen.size()) == m) {
      offer(mu_of(chosen_pts));
      return;
    }
    const long need = m - long(chosen.size());
    for (std::size_t j = start; j < points.size(); ++j) {
      if (long(points.size() - j) < need) break;
      if (gauges[j] <= read_incumbent()) {
        ++pruned;
        break;  // sorted: nothing later can strictly improve
      }
      chosen.push_back(j);
      chosen_pts.push_back(points[j]);
      bool descend = true;
      if (chosen.size() >= 2 && long(chosen.size()) < m) {
        if (mu_of(chosen_pts) <= read_incumbent()) {
          ++pruned;
          descend = false;
        }
      }
      ++nodes;
      if (descend) dfs(chosen, j + 1, chosen_pts);
      chosen.pop_back();
      chosen_pts.pop_back();
    }
  }

  // Deterministic retrieval of the first subset (in scan order) attaining mu*.
  bool find_witness(const Rat& target, std::vector<std::size_t>& chosen,
                    std::vector<RatVec>& chosen_pts, std::size_t start,
                    std::vector<RatVec>& out) {
    if (long(chosen.size()) == m) {
      if (mu_of(chosen_pts) == target) {
        out = chosen_pts;
        return true;
      }
      return false;
    }
    const long need = m - long(chosen.size());
    for (std::size_t j = start; j < points.size(); ++j) {
      if (long(points.size() - j) < need) break;
      if (gauges[j] < target) break;  // members of a witness need gauge >= target
      chosen.push_back(j);
      chosen_pts.push_back(points[j]);
      bool viable = true;
      if (chosen.size() >= 2 && long(chosen.size()) < m) viable = mu_of(chosen_pts) >= target;
      if (viable && find_witness(target, chosen, chosen_pts, j + 1, out)) return true;
      chosen.pop_back();
      chosen_pts.pop_back();
    }
    return false;
  }
};

void seed_incumbent(SubsetSearch& s) {
  const std::size_t E = s.points.size();
  const std::size_t tries = std::min<std::size_t>(E, 24);
  for (std::size_t i = 0; i < tries; ++i) {
    // The m nearest points to points[i] (inclusive) by L1 distance, tie-broken
    // lexicographically; clusters near a max-gauge vertex make strong seeds.
    std::vector<std::size_t> idx(E);
    for (std::size_t j = 0; j < E; ++j) idx[j] = j;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      Rat da = 0, db = 0;
      for (std::size_t c = 0; c < s.points[a].dim(); ++c) {
        da += abs(s.points[a][c] - s.points[i][c]);
        db += abs(s.points[b][c] - s.points[i][c]);
      }
      if (da != db) return da < db;
      return s.points[a] < s.points[b];
    });
    std::vector<RatVec> subset;
    for (long t = 0; t < s.m; ++t) subset.push_back(s.points[idx[t]]);
    s.offer(s.mu_of(subset));
  }
}

}  // namespace

AlphaValue alpha_km(const Polytope& p, const FanRays& rays, long k, long m, int threads,
                    SearchStats* stats) {
  if (m <= 0) throw PreconditionError("alpha_km: m must be positive");
  const auto pts = lattice_points(p, k);
  if (m > long(pts.size()))
    throw NoInvariantSubspaceError("no invariant subspace of that dimension: m = " +
                                   std::to_string(m) + " exceeds E_P(k) = " +
                                   std::to_string(pts.size()));

  SubsetSearch search{p, {}, {}, m};
  {
    std::vector<std::pair<Rat, RatVec>> order;
    order.reserve(pts.size());
    for (const auto& x : pts) order.emplace_back(gauge_neg_p(rays, x), x);
    std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
      if (a.first != b.first) return a.first > b.first;
      return a.second < b.second;
    });
    for (auto& [g, x] : order) {
      search.gauges.push_back(g);
      search.points.push_back(std::move(x));
    }
  }

  seed_incumbent(search);

  const std::size_t E = search.points.size();
  if (threads <= 1 || E < 2) {
    std::vector<std::size_t> chosen;
    std::vector<RatVec> chosen_pts;
    search.dfs(chosen, 0, chosen_pts);
  } else {
    // Split on the first index; the shared incumbent only improves, so the
    // final value is independent of scheduling.
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mu;
    const int nthreads = std::min<int>(threads, int(E));
    for (int t = 0; t < nthreads; ++t) {
      pool.emplace_back([&]() {
        try {
          for (;;) {
            const std::size_t j0 = next.fetch_add(1);
            if (j0 >= E || long(E - j0) < m) return;
            if (search.gauges[j0] <= search.read_incumbent()) continue;
            std::vector<std::size_t> chosen{j0};
            std::vector<RatVec> chosen_pts{search.points[j0]};
            search.dfs(chosen, j0 + 1, chosen_pts);
          }
        } catch (...) {
          std::scoped_lock lock(error_mu);
          if (!first_error) first_error = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
  }

  AlphaValue out;
  out.path = FormulaPath::SubsetSearch;
  out.k = k;
  out.m = m;
  const Rat mu_star = search.read_incumbent();
  out.value = Rat(1) / (Rat(1) + mu_star);
  {
    std::vector<std::size_t> chosen;
    std::vector<RatVec> chosen_pts;
    std::vector<RatVec> witness;
    if (!search.find_witness(mu_star, chosen, chosen_pts, 0, witness))
      throw Error("alpha_km: witness retrieval failed");
    std::sort(witness.begin(), witness.end());
    out.witness_subset = std::move(witness);
  }
  if (stats) {
    stats->nodes = search.nodes.load();
    stats->pruned = search.pruned.load();
    stats->lp_calls = search.lp_calls.load();
  }
  return out;
}

StarPReport star_p_check(const Polytope& p, const FanRays& rays) {
  StarPReport rep;
  const auto& verts = p.vertices();
  if (verts.empty()) throw PreconditionError("star_p_check: empty polytope");
  rep.max_gauge = gauge_neg_p(rays, verts[0]);
  for (const auto& v : verts) rep.max_gauge = std::max(rep.max_gauge, gauge_neg_p(rays, v));
  std::vector<bool> at_max(verts.size(), false);
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (gauge_neg_p(rays, verts[i]) == rep.max_gauge) {
      at_max[i] = true;
      rep.argmax_vertices.push_back(verts[i]);
    }
  }
  // A positive-dimensional face inside the max level set contains an edge of
  // P; convexity makes the midpoint test exact on each candidate edge.
  for (const auto& e : edges(p)) {
    if (!at_max[e.a] || !at_max[e.b]) continue;
    const RatVec mid = make_rat(1, 2) * (verts[e.a] + verts[e.b]);
    if (gauge_neg_p(rays, mid) == rep.max_gauge) {
      rep.flat_edge = e;
      rep.flat_edge_points = {verts[e.a], verts[e.b]};
      break;
    }
  }
  rep.holds = !rep.flat_edge.has_value();
  return rep;
}

StabilizationReport stabilization_report(const Polytope& p, const FanRays& rays, long m) {
  if (m <= 0) throw PreconditionError("stabilization_report: m must be positive");
  StabilizationReport rep;
  rep.m = m;
  rep.alpha = alpha_kG(p, rays, trivial_group(p.dim()), 1).value;
  rep.star = star_p_check(p, rays);

  auto sample = [&](long k) -> std::optional<Rat> {
    try {
      return alpha_km(p, rays, k, m).value;
    } catch (const NoInvariantSubspaceError&) {
      return std::nullopt;  // infinite: certainly not equal to alpha
    }
  };

  if (m == 1) {
    rep.verdict = StabilizationVerdict::StabilizesAllK;
    rep.k1 = 1;
    for (long k = 1; k <= 3; ++k) rep.samples.emplace_back(k, *sample(k));
    return rep;
  }
  if (rep.star.holds) {
    rep.verdict = StabilizationVerdict::StrictForAllK;
    for (long k = 1; k <= 3; ++k) {
      if (auto v = sample(k)) rep.samples.emplace_back(k, *v);
    }
    return rep;
  }
  rep.verdict = StabilizationVerdict::StabilizesEventually;
  constexpr long kMaxSearch = 64;
  long run = 0;
  for (long k = 1; k <= kMaxSearch; ++k) {
    const auto v = sample(k);
    if (v && long(rep.samples.size()) < 8) rep.samples.emplace_back(k, *v);
    run = (v && *v == rep.alpha) ? run + 1 : 0;
    if (run == 3) {
      rep.k1 = k - 2;
      return rep;
    }
  }
  throw Error("stabilization_report: no stabilization window found up to k = " +
              std::to_string(kMaxSearch));
}

KZeroResult k_zero(const Polytope& p, const FanRays& rays, const FiniteGroup& h) {
  require_subgroup_of_aut(h, p);
  const auto candidates = fixed_polytope_vertices(h, p);
  // u0 attains sup over P^H of max_i <u, v_i> (the alpha minimizer).
  Rat target;
  bool first = true;
  for (const auto& u : candidates) {
    const Rat g = gauge_neg_p(rays, u);
    if (first || g > target) {
      target = g;
      first = false;
    }
  }
  // Among all minimizers: least denominator lcm, then lexicographic.
  KZeroResult out;
  first = true;
  for (const auto& u : candidates) {
    if (gauge_neg_p(rays, u) != target) continue;
    const Int l = denominator_lcm(u);
    if (first || l < out.k0 || (l == out.k0 && u < out.u0)) {
      out.k0 = l;
      out.u0 = u;
      first = false;
    }
  }
  return out;
}

Rat lct_monomial(const FanRays& rays, const RatVec& u, long k) {
  if (k <= 0) throw PreconditionError("lct_monomial: k must be positive");
  if (u.dim() != rays.dim) throw DimensionMismatch("lct_monomial: point dimension");
  Int l = denominator_lcm(u);
  if (Int(k) % l != 0)
    throw PreconditionError("lct_monomial: u is not in (1/k)M (denominator " +
                            l.str() + " does not divide k)");
  for (const auto& v : rays.rays)
    if (dot(u, -v) > 1)
      throw PreconditionError("lct_monomial: u = " + vec_to_string(u) + " is outside P");
  return make_rat(1, Int(k)) / (Rat(1) + gauge_neg_p(rays, u));
}

SymmetryBound symmetry_alpha_bound(const Polytope& p, const FanRays& rays) {
  SymmetryBound out;
  out.centrally_symmetric = p.centrally_symmetric();
  out.alpha = alpha_kG(p, rays, trivial_group(p.dim()), 1).value;
  if (out.alpha > make_rat(1, 2))
    throw Error("symmetry_alpha_bound: alpha exceeds 1/2 on a Fano polytope");
  if (out.centrally_symmetric != (out.alpha == make_rat(1, 2)))
    throw Error("symmetry_alpha_bound: alpha = 1/2 must coincide with central symmetry");
  if (!out.centrally_symmetric && out.alpha > make_rat(1, 3))
    throw Error("symmetry_alpha_bound: asymmetric P must have alpha <= 1/3");
  return out;
}

}  // namespace toric
