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

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "toric/errors.hpp"

namespace toric {

// Arbitrary-precision integers and rationals with plain value semantics
// (expression templates off). Rationals are kept in lowest terms with a
// positive denominator after every operation, so equality and ordering are
// canonical.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

/// num/den as a normalized rational; throws on a zero denominator.
Rat make_rat(const Int& num, const Int& den);

inline Int num(const Rat& r) { return numerator(r); }
inline Int den(const Rat& r) { return denominator(r); }

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

/// Largest integer <= r.
Int floor_int(const Rat& r);
/// Smallest integer >= r.
Int ceil_int(const Rat& r);

/// Serializes as "p/q", or "p" when q == 1. Used for all JSON output.
std::string rat_to_string(const Rat& r);

/// Parses "p" or "p/q"; throws ParseError on malformed input.
Rat parse_rat(std::string_view text);

/// A rational vector of fixed dimension. Mixed-dimension arithmetic throws.
class RatVec {
 public:
  RatVec() = default;
  explicit RatVec(std::size_t dim) : coords_(dim) {}
  RatVec(std::initializer_list<Rat> coords) : coords_(coords) {}
  explicit RatVec(std::vector<Rat> coords) : coords_(std::move(coords)) {}

  std::size_t dim() const { return coords_.size(); }
  const Rat& operator[](std::size_t i) const { return coords_[i]; }
  Rat& operator[](std::size_t i) { return coords_[i]; }

  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  RatVec& operator+=(const RatVec& o);
  RatVec& operator-=(const RatVec& o);
  RatVec& operator*=(const Rat& s);

  friend RatVec operator+(RatVec a, const RatVec& b) { return a += b; }
  friend RatVec operator-(RatVec a, const RatVec& b) { return a -= b; }
  friend RatVec operator*(const Rat& s, RatVec v) { return v *= s; }
  friend RatVec operator-(RatVec v);

  friend bool operator==(const RatVec& a, const RatVec& b) { return a.coords_ == b.coords_; }
  /// Lexicographic order; used for deterministic dedup and orbit representatives.
  friend bool operator<(const RatVec& a, const RatVec& b);

 private:
  std::vector<Rat> coords_;
};

Rat dot(const RatVec& a, const RatVec& b);

bool is_integral(const RatVec& v);

/// Least positive k with k*v integral (the lcm of coordinate denominators).
Int denominator_lcm(const RatVec& v);

std::string vec_to_string(const RatVec& v);

/// A dense rows x cols rational matrix.
class RatMat {
 public:
  RatMat() = default;
  RatMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  RatMat(std::initializer_list<std::initializer_list<Rat>> grid);

  static RatMat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Rat& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  Rat& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  /// Matrix times column vector.
  RatVec apply(const RatVec& v) const;

  friend RatMat operator*(const RatMat& a, const RatMat& b);
  friend bool operator==(const RatMat& a, const RatMat& b) = default;
  friend bool operator<(const RatMat& a, const RatMat& b);

  bool is_integral() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> entries_;
};

/// Exact determinant. Integer matrices go through fraction-free Bareiss
/// elimination; rational ones are scaled row-wise to integers first.
/// Throws DimensionMismatch on non-square input.
Rat det(const RatMat& m);

/// Solves a*x = b exactly; nullopt means the matrix is singular.
std::optional<RatVec> solve_linear(const RatMat& a, const RatVec& b);

std::optional<RatMat> inverse(const RatMat& m);

std::size_t rank(const RatMat& m);

}  // namespace toric
