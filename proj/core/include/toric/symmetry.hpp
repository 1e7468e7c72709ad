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

#include "toric/polytope.hpp"
#include "toric/rational.hpp"

namespace toric {

/// An element of GL(n, Z): an integer matrix with determinant +-1, acting on
/// lattice points as column vectors.
struct UnimodularMap {
  RatMat matrix;

  static UnimodularMap validated(RatMat m);
  static UnimodularMap identity(std::size_t n);

  RatVec apply(const RatVec& x) const { return matrix.apply(x); }

  friend bool operator==(const UnimodularMap& a, const UnimodularMap& b) = default;
  friend bool operator<(const UnimodularMap& a, const UnimodularMap& b) {
    return a.matrix < b.matrix;
  }
};

/// A finite subgroup of GL(n, Z), closed under products and inverses, with
/// elements sorted for deterministic output.
struct FiniteGroup {
  std::size_t dim = 0;
  std::vector<UnimodularMap> elements;
  std::vector<std::size_t> generator_indices;  // positions of the given generators

  std::size_t order() const { return elements.size(); }
  bool contains(const UnimodularMap& g) const;
  /// Sorted orbit of a point under the group action.
  std::vector<RatVec> orbit(const RatVec& x) const;
};

FiniteGroup trivial_group(std::size_t dim);

/// All A in GL(n, Z) with A(Ver P) = Ver P, found by mapping a fixed frame of
/// linearly independent vertices to every ordered tuple of vertices.
FiniteGroup automorphism_group(const Polytope& p);

/// Smallest product-closed subset of `within` containing the generators and
/// the identity. Throws PreconditionError if a generator is not in `within`.
FiniteGroup subgroup_closure(std::span<const UnimodularMap> gens, const FiniteGroup& within);

/// True when every element maps Ver p onto Ver p.
bool preserves(const FiniteGroup& h, const Polytope& p);

struct OrbitDecomposition {
  long k = 1;
  /// Disjoint orbits covering (1/k)M n P; each orbit sorted, orbits ordered
  /// by their lexicographically least representative.
  std::vector<std::vector<RatVec>> orbits;
  std::vector<RatVec> representatives;
};

OrbitDecomposition orbit_decomposition(const FiniteGroup& h, const Polytope& p, long k);

/// The averaging projection pi_H(x) = (1/|H|) sum over the group of g.x.
RatVec project_pi_H(const FiniteGroup& h, const RatVec& x);

/// pi_H(Ver P), deduplicated and sorted: a superset of Ver(P^H). With
/// filter_extreme, points inside the hull of the others are dropped.
std::vector<RatVec> fixed_polytope_vertices(const FiniteGroup& h, const Polytope& p,
                                            bool filter_extreme = false);

}  // namespace toric
