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
#include <string_view>
#include <vector>

#include "toric/polytope.hpp"

namespace toric {

/// A named fan from the builtin catalog of smooth toric Fano manifolds.
struct CatalogEntry {
  std::string name;
  FanRays rays;
  std::string note;
};

/// The builtin catalog: p2, dp1, dp2, dp3, p1xp1, p3, p2xp1, p1cubed.
/// Every entry passes the smoothness and integrality checks.
const std::vector<CatalogEntry>& catalog();

/// nullptr when the name is unknown.
const CatalogEntry* find_catalog_entry(std::string_view name);

}  // namespace toric
