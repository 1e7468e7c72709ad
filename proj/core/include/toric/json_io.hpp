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

#include <string>

#include "toric/invariants.hpp"
#include "toric/oracle.hpp"
#include "toric/polytope.hpp"
#include "toric/symmetry.hpp"

namespace toric {

enum class Format { Json, Text };

/// A resolved polytope input; `rays` always carries the fan presentation
/// (recovered from facet normals when the input gave vertices).
struct PolytopeInput {
  std::string name;
  FanRays rays;
  Polytope polytope;
};

/// Accepts {"name": ..., "dim": n, "rays": [[int,...],...]} or
/// {"name": ..., "vertices": [["p/q",...],...]}. Throws ParseError.
PolytopeInput parse_polytope_json(const std::string& text);

/// {"name": ..., "dim": n, "rays": [[int,...],...]}.
std::string polytope_to_json(const std::string& name, const FanRays& rays);

/// Group spec: "trivial" | "full-aut" | "gens:[[a,b],[c,d]];[[...]]" (row-major
/// generator matrices), or the JSON object {"generators": [[[int,...],...]]}.
/// Generators are validated as automorphisms of p, never trusted.
FiniteGroup parse_group_spec(const std::string& spec, const Polytope& p);

struct CheckResult {
  SmoothnessReport smooth;
  bool integral = false;
  std::size_t aut_order = 0;
};

std::string render_check(const PolytopeInput& in, const CheckResult& r, Format f);
std::string render_alpha(const PolytopeInput& in, const std::string& group_spec,
                         const AlphaValue& vertex_path, const AlphaValue& orbit_path,
                         bool smooth, Format f);
std::string render_alpha_km(const PolytopeInput& in, const AlphaValue& r,
                            const SearchStats& stats, Format f);
/// The m > E_P(k) outcome (Grassmannian of that dimension is empty).
std::string render_alpha_km_infinite(const PolytopeInput& in, long k, long m,
                                     const std::string& reason, Format f);
std::string render_star_p(const PolytopeInput& in, const StarPReport& r, Format f);
std::string render_stabilize(const PolytopeInput& in, const StabilizationReport& r, Format f);
std::string render_orbits(const PolytopeInput& in, const OrbitDecomposition& d,
                          std::size_t group_order, Format f);
std::string render_ehrhart(const PolytopeInput& in, const EhrhartFitReport& r, Format f);
std::string render_k0(const PolytopeInput& in, const KZeroResult& r, std::size_t group_order,
                      Format f);

}  // namespace toric
