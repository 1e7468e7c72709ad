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

#include "toric/json_io.hpp"

namespace toric {

/// The full invariant table over the builtin catalog, one row per
/// (polytope, subgroup) pair. Byte-stable across runs: every ordering in the
/// pipeline is deterministic. Both alpha formulas are evaluated per row and
/// must agree.
std::string render_report(Format f);

}  // namespace toric
