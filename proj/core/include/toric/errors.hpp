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

#include <stdexcept>
#include <string>

namespace toric {

/// Base class of all errors thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

/// The halfspace intersection is unbounded (rays do not positively span).
struct UnboundedError : Error {
  using Error::Error;
};

/// A halfspace of the anticanonical presentation supports no vertex.
struct DegenerateError : Error {
  using Error::Error;
};

/// A vertex has more than dim tight halfspaces.
struct NotSimpleError : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

/// Simplex pivot count exceeded the configured ceiling.
struct PivotLimitError : Error {
  using Error::Error;
};

struct PreconditionError : Error {
  using Error::Error;
};

/// alpha_{k,m} with m > E_P(k): inf over the empty set, i.e. +infinity.
struct NoInvariantSubspaceError : Error {
  using Error::Error;
};

/// Brute-force subset enumeration would exceed the configured ceiling.
struct CeilingExceededError : Error {
  using Error::Error;
};

}  // namespace toric
