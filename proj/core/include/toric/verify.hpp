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

#include <iosfwd>
#include <string>
#include <vector>

#include "toric/rational.hpp"

namespace toric {

/// A deterministic pseudo-random (F, U) pair for threshold cross-checks.
/// U always contains the vertex set of a catalog polytope, so the origin is
/// interior to conv(U); F consists of lattice points of the same polytope.
struct VerificationPair {
  std::vector<RatVec> f;
  std::vector<RatVec> u;
  std::string label;
};

/// The 30 seeded pairs used by the verification suite.
std::vector<VerificationPair> verification_pairs();

/// The oracle verification suite. Prints TAP-style lines
/// ("ok N description" / "not ok N description (expected E, got G)") and
/// returns the number of failing checks.
int run_verify(std::ostream& out);

}  // namespace toric
