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

#include "toric/catalog.hpp"

namespace toric {

namespace {

RatVec v2(long a, long b) { return RatVec{Rat(a), Rat(b)}; }
RatVec v3(long a, long b, long c) { return RatVec{Rat(a), Rat(b), Rat(c)}; }

std::vector<CatalogEntry> build() {
  std::vector<CatalogEntry> out;
  out.push_back({"p2", FanRays(2, {v2(1, 0), v2(0, 1), v2(-1, -1)}), "the projective plane"});
  out.push_back({"dp1", FanRays(2, {v2(1, 0), v2(0, 1), v2(-1, -1), v2(1, 1)}),
                 "the plane blown up at one point"});
  out.push_back({"dp2", FanRays(2, {v2(1, 0), v2(0, 1), v2(-1, -1), v2(-1, 0), v2(0, -1)}),
                 "the plane blown up at two points"});
  out.push_back(
      {"dp3", FanRays(2, {v2(1, 0), v2(0, 1), v2(-1, -1), v2(-1, 0), v2(0, -1), v2(1, 1)}),
       "the plane blown up at three points"});
  out.push_back({"p1xp1", FanRays(2, {v2(1, 0), v2(0, 1), v2(-1, 0), v2(0, -1)}),
                 "a product of two projective lines"});
  out.push_back({"p3", FanRays(3, {v3(1, 0, 0), v3(0, 1, 0), v3(0, 0, 1), v3(-1, -1, -1)}),
                 "projective three-space"});
  out.push_back(
      {"p2xp1", FanRays(3, {v3(1, 0, 0), v3(0, 1, 0), v3(-1, -1, 0), v3(0, 0, 1), v3(0, 0, -1)}),
       "the plane times a projective line"});
  out.push_back({"p1cubed",
                 FanRays(3, {v3(1, 0, 0), v3(-1, 0, 0), v3(0, 1, 0), v3(0, -1, 0), v3(0, 0, 1),
                             v3(0, 0, -1)}),
                 "a product of three projective lines"});
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build();
  return entries;
}

const CatalogEntry* find_catalog_entry(std::string_view name) {
  for (const auto& e : catalog())
    if (e.name == name) return &e;
  return nullptr;
}

}  // namespace toric
