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

#include "toric/rational.hpp"

using namespace toric;

namespace {

Rat random_rat(std::mt19937_64& rng) {
  const long num = long(rng() % 41) - 20;
  const long den = 1 + long(rng() % 12);
  return make_rat(Int(num), Int(den));
}

RatMat random_int_matrix(std::mt19937_64& rng, std::size_t n) {
  RatMat m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Rat(long(rng() % 9) - 4);
  return m;
}

}  // namespace

TEST_CASE("rational normalization and serialization") {
  CHECK(make_rat(Int(-4), Int(-8)) == make_rat(Int(1), Int(2)));
  CHECK(rat_to_string(make_rat(Int(-4), Int(8))) == "-1/2");
  CHECK(rat_to_string(Rat(7)) == "7");
  CHECK(parse_rat("3/9") == make_rat(Int(1), Int(3)));
  CHECK(parse_rat("-2") == Rat(-2));
  CHECK_THROWS_AS(parse_rat("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rat("a/2"), ParseError);
  CHECK_THROWS_AS(make_rat(Int(1), Int(0)), Error);
  CHECK(floor_int(make_rat(Int(-3), Int(2))) == Int(-2));
  CHECK(ceil_int(make_rat(Int(-3), Int(2))) == Int(-1));
  CHECK(floor_int(Rat(5)) == Int(5));
}

TEST_CASE("exactness round-trips on random rationals") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const Rat a = random_rat(rng);
    const Rat b = random_rat(rng);
    CHECK((a + b) - b == a);
    if (b != 0) CHECK((a * b) / b == a);
  }
}

TEST_CASE("determinant on the stated examples") {
  CHECK(det(RatMat::identity(2)) == Rat(1));
  CHECK(det(RatMat{{Rat(1), Rat(0)}, {Rat(1), Rat(1)}}) == Rat(1));
  CHECK(det(RatMat{{Rat(2), Rat(0)}, {Rat(0), Rat(2)}}) == Rat(4));
  CHECK_THROWS_AS(det(RatMat(2, 3)), DimensionMismatch);
}

TEST_CASE("determinant is multiplicative on random integer matrices") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = 2 + rng() % 3;
    const RatMat a = random_int_matrix(rng, n);
    const RatMat b = random_int_matrix(rng, n);
    CHECK(det(a * b) == det(a) * det(b));
  }
}

TEST_CASE("determinant of rational matrices") {
  RatMat m{{make_rat(Int(1), Int(2)), Rat(0)}, {Rat(0), make_rat(Int(1), Int(3))}};
  CHECK(det(m) == make_rat(Int(1), Int(6)));
}

TEST_CASE("solve_linear on the stated examples") {
  {
    const auto x = solve_linear(RatMat::identity(2), RatVec{Rat(3), Rat(5)});
    REQUIRE(x.has_value());
    CHECK(*x == RatVec{Rat(3), Rat(5)});
  }
  {
    const auto x = solve_linear(RatMat{{Rat(1), Rat(1)}, {Rat(1), Rat(-1)}}, RatVec{Rat(1), Rat(1)});
    REQUIRE(x.has_value());
    CHECK(*x == RatVec{Rat(1), Rat(0)});
  }
  CHECK(!solve_linear(RatMat{{Rat(1), Rat(1)}, {Rat(2), Rat(2)}}, RatVec{Rat(1), Rat(1)}));
  CHECK_THROWS_AS(solve_linear(RatMat::identity(2), RatVec{Rat(1)}), DimensionMismatch);
}

TEST_CASE("solve_linear then multiply back reproduces rhs") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = 2 + rng() % 3;
    const RatMat a = random_int_matrix(rng, n);
    RatVec b(n);
    for (std::size_t j = 0; j < n; ++j) b[j] = random_rat(rng);
    const auto x = solve_linear(a, b);
    if (!x) {
      CHECK(det(a) == Rat(0));
      continue;
    }
    CHECK(a.apply(*x) == b);
  }
}

TEST_CASE("denominator_lcm") {
  CHECK(denominator_lcm(RatVec{make_rat(Int(1), Int(2)), make_rat(Int(1), Int(2))}) == Int(2));
  CHECK(denominator_lcm(RatVec{Rat(-1), Rat(-1)}) == Int(1));
  CHECK(denominator_lcm(RatVec{make_rat(Int(1), Int(2)), make_rat(Int(1), Int(3))}) == Int(6));
}

TEST_CASE("vector arithmetic is dimension-checked") {
  RatVec a{Rat(1), Rat(2)};
  RatVec b{Rat(1)};
  CHECK_THROWS_AS(a + b, DimensionMismatch);
  CHECK_THROWS_AS(dot(a, b), DimensionMismatch);
  CHECK(Rat(2) * a == RatVec{Rat(2), Rat(4)});
  CHECK(a - a == RatVec(2));
}

TEST_CASE("rank and inverse") {
  CHECK(rank(RatMat{{Rat(1), Rat(1)}, {Rat(2), Rat(2)}}) == 1);
  CHECK(rank(RatMat::identity(3)) == 3);
  const auto inv = inverse(RatMat{{Rat(2), Rat(1)}, {Rat(1), Rat(1)}});
  REQUIRE(inv.has_value());
  CHECK(*inv * RatMat{{Rat(2), Rat(1)}, {Rat(1), Rat(1)}} == RatMat::identity(2));
}
