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

#include "toric/rational.hpp"

#include <algorithm>
#include <sstream>

namespace toric {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw Error("make_rat: zero denominator");
  // The two-argument constructor rejects negative denominators; division
  // normalizes the sign itself.
  return Rat(num) / Rat(den);
}

Int floor_int(const Rat& r) {
  Int q = numerator(r) / denominator(r);
  if (numerator(r) < 0 && q * denominator(r) != numerator(r)) --q;
  return q;
}

Int ceil_int(const Rat& r) { return -floor_int(-r); }

std::string rat_to_string(const Rat& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << '/' << denominator(r);
  return os.str();
}

namespace {

Int parse_int(std::string_view text) {
  if (text.empty()) throw ParseError("empty integer");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) throw ParseError("bare sign is not an integer");
  for (std::size_t i = start; i < text.size(); ++i)
    if (text[i] < '0' || text[i] > '9')
      throw ParseError("invalid integer: '" + std::string(text) + "'");
  return Int(std::string(text));
}

}  // namespace

Rat parse_rat(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(text));
  const Int p = parse_int(text.substr(0, slash));
  const Int q = parse_int(text.substr(slash + 1));
  if (q == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  return make_rat(p, q);
}

namespace {
void require_same_dim(const RatVec& a, const RatVec& b, const char* op) {
  if (a.dim() != b.dim())
    throw DimensionMismatch(std::string(op) + ": dimensions " + std::to_string(a.dim()) +
                            " vs " + std::to_string(b.dim()));
}
}  // namespace

RatVec& RatVec::operator+=(const RatVec& o) {
  require_same_dim(*this, o, "RatVec+");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

RatVec& RatVec::operator-=(const RatVec& o) {
  require_same_dim(*this, o, "RatVec-");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

RatVec& RatVec::operator*=(const Rat& s) {
  for (auto& c : coords_) c *= s;
  return *this;
}

RatVec operator-(RatVec v) {
  for (auto& c : v.coords_) c = -c;
  return v;
}

bool operator<(const RatVec& a, const RatVec& b) {
  return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(),
                                      b.coords_.end());
}

Rat dot(const RatVec& a, const RatVec& b) {
  require_same_dim(a, b, "dot");
  Rat acc = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) acc += a[i] * b[i];
  return acc;
}

bool is_integral(const RatVec& v) {
  for (const auto& c : v)
    if (!is_integer(c)) return false;
  return true;
}

Int denominator_lcm(const RatVec& v) {
  Int l = 1;
  for (const auto& c : v) l = lcm(l, denominator(c));
  return l;
}

std::string vec_to_string(const RatVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) s += ", ";
    s += rat_to_string(v[i]);
  }
  s += ")";
  return s;
}

RatMat::RatMat(std::initializer_list<std::initializer_list<Rat>> grid) {
  rows_ = grid.size();
  cols_ = rows_ ? grid.begin()->size() : 0;
  entries_.reserve(rows_ * cols_);
  for (const auto& row : grid) {
    if (row.size() != cols_) throw DimensionMismatch("RatMat: ragged initializer");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

RatMat RatMat::identity(std::size_t n) {
  RatMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatVec RatMat::apply(const RatVec& v) const {
  if (v.dim() != cols_) throw DimensionMismatch("RatMat::apply");
  RatVec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Rat acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) acc += (*this)(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

RatMat operator*(const RatMat& a, const RatMat& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("RatMat*");
  RatMat out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

bool operator<(const RatMat& a, const RatMat& b) {
  if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
  if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
  return std::lexicographical_compare(a.entries_.begin(), a.entries_.end(), b.entries_.begin(),
                                      b.entries_.end());
}

bool RatMat::is_integral() const {
  for (const auto& e : entries_)
    if (!is_integer(e)) return false;
  return true;
}

namespace {

// Fraction-free Bareiss elimination on an integer matrix.
Int bareiss_det(std::vector<std::vector<Int>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Exact division: every entry stays an integer minor.
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace

Rat det(const RatMat& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("det: non-square matrix");
  const std::size_t n = m.rows();
  // Scale each row to integers; divide the scale factors back out at the end.
  std::vector<std::vector<Int>> grid(n, std::vector<Int>(n));
  Rat scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Int l = 1;
    for (std::size_t j = 0; j < n; ++j) l = lcm(l, denominator(m(i, j)));
    for (std::size_t j = 0; j < n; ++j) grid[i][j] = numerator(m(i, j)) * (l / denominator(m(i, j)));
    scale *= Rat(l);
  }
  return Rat(bareiss_det(std::move(grid))) / scale;
}

std::optional<RatVec> solve_linear(const RatMat& a, const RatVec& b) {
  if (a.rows() != a.cols()) throw DimensionMismatch("solve_linear: non-square matrix");
  if (b.dim() != a.rows()) throw DimensionMismatch("solve_linear: rhs dimension");
  const std::size_t n = a.rows();
  // Gauss-Jordan on the augmented matrix.
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a(i, j);
    m[i][n] = b[i];
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(m[col], m[piv]);
    const Rat p = m[col][col];
    for (std::size_t j = col; j <= n; ++j) m[col][j] /= p;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || m[i][col] == 0) continue;
      const Rat f = m[i][col];
      for (std::size_t j = col; j <= n; ++j) m[i][j] -= f * m[col][j];
    }
  }
  RatVec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = m[i][n];
  return x;
}

std::optional<RatMat> inverse(const RatMat& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse: non-square matrix");
  const std::size_t n = m.rows();
  RatMat out(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    RatVec e(n);
    e[j] = 1;
    auto col = solve_linear(m, e);
    if (!col) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i) out(i, j) = (*col)[i];
  }
  return out;
}

std::size_t rank(const RatMat& m) {
  std::vector<std::vector<Rat>> grid(m.rows(), std::vector<Rat>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) grid[i][j] = m(i, j);
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
    std::size_t piv = r;
    while (piv < m.rows() && grid[piv][col] == 0) ++piv;
    if (piv == m.rows()) continue;
    std::swap(grid[r], grid[piv]);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (grid[i][col] == 0) continue;
      const Rat f = grid[i][col] / grid[r][col];
      for (std::size_t j = col; j < m.cols(); ++j) grid[i][j] -= f * grid[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace toric
