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

#include "toric/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "toric/simplex.hpp"

namespace toric {

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

// Feasibility: x in conv(points)?
bool hull_member(const RatVec& x, std::span<const RatVec> points) {
  const std::size_t n = x.dim();
  const std::size_t s = points.size();
  LinearProgram lp;
  lp.sense = Sense::Maximize;
  lp.objective = RatVec(s);
  lp.lower_bounds.assign(s, Rat(0));
  for (std::size_t r = 0; r < n; ++r) {
    RatVec row(s);
    for (std::size_t i = 0; i < s; ++i) row[i] = points[i][r];
    lp.eq_rows.emplace_back(std::move(row), x[r]);
  }
  lp.eq_rows.emplace_back(RatVec(std::vector<Rat>(s, Rat(1))), Rat(1));
  return solve(lp).status == LpStatus::Optimal;
}

// Largest c >= 0 with x + c*dir in conv(points); the hull is bounded.
Rat max_step(const RatVec& x, const RatVec& dir, std::span<const RatVec> points) {
  const std::size_t n = x.dim();
  const std::size_t s = points.size();
  LinearProgram lp;
  lp.sense = Sense::Maximize;
  lp.objective = RatVec(s + 1);
  lp.objective[s] = 1;
  lp.lower_bounds.assign(s + 1, Rat(0));
  for (std::size_t r = 0; r < n; ++r) {
    RatVec row(s + 1);
    for (std::size_t i = 0; i < s; ++i) row[i] = points[i][r];
    row[s] = -dir[r];
    lp.eq_rows.emplace_back(std::move(row), x[r]);
  }
  {
    RatVec row(s + 1);
    for (std::size_t i = 0; i < s; ++i) row[i] = 1;
    lp.eq_rows.emplace_back(std::move(row), Rat(1));
  }
  const auto out = solve(lp);
  if (out.status != LpStatus::Optimal) throw Error("max_step: unexpected LP status");
  return out.value;
}

}  // namespace

Membership interior_membership(const RatVec& x, std::span<const RatVec> points) {
  if (points.empty()) throw PreconditionError("interior_membership: empty point set");
  for (const auto& pt : points)
    if (pt.dim() != x.dim()) throw DimensionMismatch("interior_membership: point dimension");
  if (!hull_member(x, points)) return Membership::Outside;
  const std::size_t n = x.dim();
  for (std::size_t d = 0; d < n; ++d) {
    for (int sign : {1, -1}) {
      RatVec dir(n);
      dir[d] = sign;
      if (max_step(x, dir, points) == 0) return Membership::Boundary;
    }
  }
  return Membership::Interior;
}

BisectionResult c_star_bisection(std::span<const RatVec> f, std::span<const RatVec> u,
                                 int iterations) {
  if (iterations <= 0) throw PreconditionError("c_star_bisection: iterations must be positive");
  if (f.empty() || u.empty()) throw PreconditionError("c_star_bisection: empty point set");
  const std::size_t n = f[0].dim();
  const RatVec origin(n);
  if (interior_membership(origin, u) != Membership::Interior)
    throw PreconditionError("c_star_bisection: origin not interior to conv U");

  // Origin interior to c conv(F) + (1-c) conv(U); the Minkowski combination is
  // generated by the pairwise vertex sums (redundancy is harmless).
  const auto member = [&](const Rat& c) {
    std::set<RatVec> sums;
    for (const auto& fp : f)
      for (const auto& up : u) sums.insert(c * fp + (Rat(1) - c) * up);
    const std::vector<RatVec> pts(sums.begin(), sums.end());
    return interior_membership(origin, pts) == Membership::Interior;
  };

  // member(c) is true strictly below the threshold and false strictly above;
  // the endpoints carry the conventions member(0) = true (precondition) and
  // member(1) = false (c ranges over (0,1)).
  BisectionResult res;
  res.lower = 0;
  res.upper = 1;
  res.iterations = iterations;
  for (int i = 0; i < iterations; ++i) {
    const Rat mid = (res.lower + res.upper) / 2;
    if (member(mid))
      res.lower = mid;
    else
      res.upper = mid;
  }
  return res;
}

namespace {

// ---- Exact fraction arithmetic over __int128 with overflow detection. ----
// The brute-force evaluator must be independent of the rational simplex, so
// it carries its own scalar type; anything that overflows retries with Rat.

struct FracOverflow {};

inline __int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

struct Frac128 {
  __int128 n = 0;
  __int128 d = 1;

  Frac128() = default;
  Frac128(long long v) : n(v), d(1) {}
  Frac128(__int128 nn, __int128 dd) : n(nn), d(dd) { normalize(); }

  void normalize() {
    if (d == 0) throw Error("Frac128: zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    const __int128 g = gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
  }

  static __int128 mul(__int128 a, __int128 b) {
    __int128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw FracOverflow{};
    return r;
  }
  static __int128 add(__int128 a, __int128 b) {
    __int128 r;
    if (__builtin_add_overflow(a, b, &r)) throw FracOverflow{};
    return r;
  }

  friend Frac128 operator+(const Frac128& a, const Frac128& b) {
    return Frac128(add(mul(a.n, b.d), mul(b.n, a.d)), mul(a.d, b.d));
  }
  friend Frac128 operator-(const Frac128& a, const Frac128& b) {
    return Frac128(add(mul(a.n, b.d), -mul(b.n, a.d)), mul(a.d, b.d));
  }
  friend Frac128 operator*(const Frac128& a, const Frac128& b) {
    return Frac128(mul(a.n, b.n), mul(a.d, b.d));
  }
  friend Frac128 operator/(const Frac128& a, const Frac128& b) {
    if (b.n == 0) throw Error("Frac128: division by zero");
    return Frac128(mul(a.n, b.d), mul(a.d, b.n));
  }
  Frac128& operator+=(const Frac128& o) { return *this = *this + o; }
  Frac128& operator-=(const Frac128& o) { return *this = *this - o; }
  Frac128& operator/=(const Frac128& o) { return *this = *this / o; }

  friend bool operator==(const Frac128& a, const Frac128& b) {
    return a.n == b.n && a.d == b.d;
  }
  friend bool operator<(const Frac128& a, const Frac128& b) {
    return mul(a.n, b.d) < mul(b.n, a.d);
  }
  friend bool operator>(const Frac128& a, const Frac128& b) { return b < a; }
  friend bool operator<=(const Frac128& a, const Frac128& b) { return !(b < a); }
};

Int int128_to_int(__int128 v) {
  const bool neg = v < 0;
  unsigned __int128 mag = neg ? -(unsigned __int128)v : (unsigned __int128)v;
  Int out = Int(std::uint64_t(mag >> 64));
  out <<= 64;
  out += Int(std::uint64_t(mag));
  return neg ? -out : out;
}

Rat frac_to_rat(const Frac128& f) { return make_rat(int128_to_int(f.n), int128_to_int(f.d)); }

// Value of min over the simplex of max over rows of B*lambda, solved as the
// standard max sum(q) s.t. (B+shift) q <= 1 transformation. Templated so the
// same pivoting runs on Frac128 (fast path) and Rat (overflow fallback).
template <typename F>
F game_value(const std::vector<std::vector<long long>>& b) {
  const std::size_t d = b.size();
  const std::size_t m = b[0].size();
  long long mn = b[0][0];
  for (const auto& row : b)
    for (long long e : row) mn = std::min(mn, e);
  const long long shift = 1 - mn;  // entries become >= 1

  const std::size_t ncols = m + d;
  std::vector<std::vector<F>> t(d, std::vector<F>(ncols + 1));
  std::vector<std::size_t> basis(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < m; ++j) t[i][j] = F(b[i][j] + shift);
    t[i][m + i] = F(1);
    t[i][ncols] = F(1);
    basis[i] = m + i;
  }
  std::vector<F> red(ncols + 1, F(0));
  for (std::size_t j = 0; j < m; ++j) red[j] = F(1);

  const long ceiling = 10 * long(d + ncols) + 50;
  for (long pivots = 0;; ++pivots) {
    if (pivots > ceiling) throw Error("game_value: pivot ceiling exceeded");
    std::size_t enter = ncols;
    for (std::size_t j = 0; j < ncols; ++j) {
      if (F(0) < red[j]) {
        enter = j;
        break;
      }
    }
    if (enter == ncols) break;
    std::size_t leave = d;
    F best;
    for (std::size_t i = 0; i < d; ++i) {
      if (!(F(0) < t[i][enter])) continue;
      const F ratio = t[i][ncols] / t[i][enter];
      if (leave == d || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == d) throw Error("game_value: unexpected unbounded direction");
    auto& row = t[leave];
    const F p = row[enter];
    for (auto& e : row) e /= p;
    for (std::size_t i = 0; i < d; ++i) {
      if (i == leave) continue;
      const F f = t[i][enter];
      if (f == F(0)) continue;
      for (std::size_t j = 0; j <= ncols; ++j) t[i][j] -= f * row[j];
      t[i][enter] = F(0);
    }
    {
      const F f = red[enter];
      if (!(f == F(0))) {
        for (std::size_t j = 0; j <= ncols; ++j) red[j] -= f * row[j];
        red[enter] = F(0);
      }
    }
    basis[leave] = enter;
  }

  F total(0);
  for (std::size_t i = 0; i < d; ++i)
    if (basis[i] < m) total += t[i][ncols];
  // total = max sum(q) > 0 since the shifted matrix is strictly positive.
  return F(1) / total - F(shift);
}

Int binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  Int b = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    b *= Int(n - k + i);
    b /= Int(i);
  }
  return b;
}

}  // namespace

AlphaValue alpha_km_bruteforce(const Polytope& p, const FanRays& rays, long k, long m,
                               long ceiling) {
  if (m <= 0) throw PreconditionError("alpha_km_bruteforce: m must be positive");
  const auto pts = lattice_points(p, k);
  const std::size_t e = pts.size();
  if (m > long(e))
    throw NoInvariantSubspaceError("no invariant subspace of that dimension: m = " +
                                   std::to_string(m) + " exceeds E_P(k) = " + std::to_string(e));
  if (binomial(e, std::size_t(m)) > Int(ceiling))
    throw CeilingExceededError("alpha_km_bruteforce: C(" + std::to_string(e) + ", " +
                               std::to_string(m) + ") exceeds ceiling " +
                               std::to_string(ceiling));

  // Integer pairings <k*pt, v_r>; all small.
  const std::size_t d = rays.rays.size();
  std::vector<std::vector<long long>> pairing(e, std::vector<long long>(d));
  for (std::size_t i = 0; i < e; ++i)
    for (std::size_t r = 0; r < d; ++r)
      pairing[i][r] = (Rat(k) * dot(pts[i], rays.rays[r])).convert_to<long long>();

  std::vector<std::size_t> idx(static_cast<std::size_t>(m));
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  bool have_best = false;
  Frac128 best;
  std::vector<std::size_t> best_idx;
  std::vector<std::vector<long long>> b(d, std::vector<long long>(std::size_t(m)));
  do {
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < idx.size(); ++c) b[r][c] = pairing[idx[c]][r];
    Frac128 val;
    try {
      val = game_value<Frac128>(b);
    } catch (const FracOverflow&) {
      const Rat exact = game_value<Rat>(b);
      val = Frac128(numerator(exact).convert_to<long long>(),
                    denominator(exact).convert_to<long long>());
    }
    if (!have_best || best < val) {
      best = val;
      best_idx = idx;
      have_best = true;
    }
  } while (next_combination(idx, e));

  AlphaValue out;
  out.path = FormulaPath::SubsetSearch;
  out.k = k;
  out.m = m;
  const Rat mu_star = frac_to_rat(best) / Rat(k);
  out.value = Rat(1) / (Rat(1) + mu_star);
  for (auto i : best_idx) out.witness_subset.push_back(pts[i]);
  return out;
}

// ---------------------------------------------------------------------------
// Face lattice, pulling triangulation, volume.

namespace {

using VertexSet = std::vector<std::size_t>;  // sorted vertex indices

struct FaceLattice {
  // faces[dim] = list of vertex sets; dim ranges 0..n-1, plus the whole
  // polytope handled separately by the caller.
  std::vector<std::vector<VertexSet>> faces;
};

std::vector<std::size_t> common_tight(const Polytope& p, const VertexSet& vs) {
  std::vector<std::size_t> inter = p.tight_set(vs[0]);
  for (std::size_t i = 1; i < vs.size(); ++i) {
    std::vector<std::size_t> next;
    std::set_intersection(inter.begin(), inter.end(), p.tight_set(vs[i]).begin(),
                          p.tight_set(vs[i]).end(), std::back_inserter(next));
    inter = std::move(next);
  }
  return inter;
}

// Vertices of the minimal face containing vs: those tight on every halfspace
// that is tight on all of vs. An empty common tight set means the whole
// polytope, signalled by an empty return.
VertexSet closure(const Polytope& p, const VertexSet& vs) {
  const auto j = common_tight(p, vs);
  if (j.empty()) return {};
  VertexSet out;
  for (std::size_t i = 0; i < p.vertices().size(); ++i) {
    const auto& t = p.tight_set(i);
    if (std::includes(t.begin(), t.end(), j.begin(), j.end())) out.push_back(i);
  }
  return out;
}

std::size_t affine_dim(const Polytope& p, const VertexSet& vs) {
  if (vs.size() <= 1) return 0;
  RatMat m(vs.size() - 1, p.dim());
  for (std::size_t r = 1; r < vs.size(); ++r)
    for (std::size_t c = 0; c < p.dim(); ++c)
      m(r - 1, c) = p.vertices()[vs[r]][c] - p.vertices()[vs[0]][c];
  return rank(m);
}

FaceLattice face_lattice(const Polytope& p) {
  const std::size_t n = p.dim();
  FaceLattice fl;
  fl.faces.resize(n);
  std::set<VertexSet> seen;
  std::vector<VertexSet> frontier;
  for (std::size_t i = 0; i < p.vertices().size(); ++i) {
    fl.faces[0].push_back({i});
    frontier.push_back({i});
    seen.insert({i});
  }
  // Joining a face with one extra vertex and closing reaches every face.
  while (!frontier.empty()) {
    std::vector<VertexSet> next;
    for (const auto& f : frontier) {
      for (std::size_t w = 0; w < p.vertices().size(); ++w) {
        if (std::binary_search(f.begin(), f.end(), w)) continue;
        VertexSet joined = f;
        joined.insert(std::lower_bound(joined.begin(), joined.end(), w), w);
        VertexSet c = closure(p, joined);
        if (c.empty()) continue;  // the whole polytope
        if (!seen.insert(c).second) continue;
        const std::size_t dim = affine_dim(p, c);
        if (dim < n) {
          fl.faces[dim].push_back(c);
          next.push_back(std::move(c));
        }
      }
    }
    frontier = std::move(next);
  }
  for (auto& level : fl.faces) std::sort(level.begin(), level.end());
  return fl;
}

// Pulling triangulation: cone the least vertex over the triangulations of the
// facets that miss it.
void triangulate(const FaceLattice& fl, const VertexSet& face, std::size_t dim,
                 std::vector<VertexSet>& out) {
  if (face.size() == dim + 1) {
    out.push_back(face);
    return;
  }
  const std::size_t v0 = face.front();
  for (const auto& child : fl.faces[dim - 1]) {
    if (std::binary_search(child.begin(), child.end(), v0)) continue;
    if (!std::includes(face.begin(), face.end(), child.begin(), child.end())) continue;
    std::vector<VertexSet> sub;
    triangulate(fl, child, dim - 1, sub);
    for (auto& s : sub) {
      VertexSet simplex = s;
      simplex.insert(std::lower_bound(simplex.begin(), simplex.end(), v0), v0);
      out.push_back(std::move(simplex));
    }
  }
}

}  // namespace

Rat volume(const Polytope& p) {
  const std::size_t n = p.dim();
  if (p.vertices().empty()) return 0;
  if (affine_dim(p, [&] {
        VertexSet all(p.vertices().size());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
        return all;
      }()) < n)
    return 0;
  const FaceLattice fl = face_lattice(p);
  VertexSet whole(p.vertices().size());
  for (std::size_t i = 0; i < whole.size(); ++i) whole[i] = i;
  std::vector<VertexSet> simplices;
  triangulate(fl, whole, n, simplices);
  Rat total = 0;
  Int nfact = 1;
  for (std::size_t i = 2; i <= n; ++i) nfact *= Int(i);
  for (const auto& s : simplices) {
    RatMat m(n, n);
    for (std::size_t r = 1; r <= n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        m(r - 1, c) = p.vertices()[s[r]][c] - p.vertices()[s[0]][c];
    total += abs(det(m));
  }
  return total / Rat(nfact);
}

EhrhartFitReport ehrhart_fit_check(const Polytope& p, long kmax) {
  const std::size_t n = p.dim();
  if (kmax < long(n) + 2)
    throw PreconditionError("ehrhart_fit_check: kmax must be at least dim + 2");
  EhrhartFitReport rep;
  for (long k = 1; k <= kmax; ++k) rep.counts.push_back(ehrhart_count(p, k));

  // Lagrange interpolation through (k, E(k)) for k = 1..n+1.
  std::vector<Rat> poly(n + 1, Rat(0));
  for (std::size_t i = 0; i <= n; ++i) {
    std::vector<Rat> basis{Rat(1)};
    Rat denom = 1;
    const Rat xi = Rat(long(i) + 1);
    for (std::size_t j = 0; j <= n; ++j) {
      if (j == i) continue;
      const Rat xj = Rat(long(j) + 1);
      // basis *= (x - xj)
      std::vector<Rat> next(basis.size() + 1, Rat(0));
      for (std::size_t t = 0; t < basis.size(); ++t) {
        next[t + 1] += basis[t];
        next[t] -= xj * basis[t];
      }
      basis = std::move(next);
      denom *= xi - xj;
    }
    const Rat scale = Rat(rep.counts[i]) / denom;
    for (std::size_t t = 0; t < basis.size(); ++t) poly[t] += scale * basis[t];
  }
  rep.coefficients = poly;
  rep.volume = volume(p);

  auto eval = [&](long k) {
    Rat acc = 0;
    Rat power = 1;
    for (const auto& c : poly) {
      acc += c * power;
      power *= Rat(k);
    }
    return acc;
  };

  rep.pass = true;
  for (long k = long(n) + 2; k <= kmax; ++k) {
    if (eval(k) != Rat(rep.counts[std::size_t(k - 1)])) {
      rep.pass = false;
      rep.detail = "polynomial fails to predict E_P(" + std::to_string(k) + ")";
      return rep;
    }
  }
  if (poly[n] != rep.volume) {
    rep.pass = false;
    rep.detail = "leading coefficient " + rat_to_string(poly[n]) +
                 " differs from volume " + rat_to_string(rep.volume);
  }
  return rep;
}

}  // namespace toric
