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

#include "toric/report.hpp"

#include <json.hpp>

#include <iomanip>
#include <sstream>

#include "toric/catalog.hpp"
#include "toric/invariants.hpp"

namespace toric {

namespace {

struct RowSpec {
  const char* entry;
  const char* group;  // group spec grammar
  const char* label;
};

// One row per (P, H) pair; reflections and cycles by generator matrices.
constexpr RowSpec kRows[] = {
    {"p2", "trivial", "trivial"},
    {"p2", "gens:[[0,1],[1,0]]", "reflection y=x"},
    {"p2", "gens:[[-1,-1],[1,0]]", "cyclic order 3"},
    {"p2", "full-aut", "full Aut P"},
    {"dp1", "trivial", "trivial"},
    {"dp1", "full-aut", "full Aut P"},
    {"dp2", "trivial", "trivial"},
    {"dp2", "full-aut", "full Aut P"},
    {"dp3", "trivial", "trivial"},
    {"dp3", "gens:[[0,1],[1,0]]", "reflection y=x"},
    {"dp3", "full-aut", "full Aut P"},
    {"p1xp1", "trivial", "trivial"},
    {"p1xp1", "full-aut", "full Aut P"},
    {"p3", "trivial", "trivial"},
    {"p3", "full-aut", "full Aut P"},
    {"p2xp1", "trivial", "trivial"},
    {"p2xp1", "full-aut", "full Aut P"},
    {"p1cubed", "trivial", "trivial"},
    {"p1cubed", "full-aut", "full Aut P"},
};

struct Row {
  std::string name, label;
  std::size_t aut_order = 0, h_order = 0;
  Rat alpha;
  RatVec witness;
  Int k0;
  bool star_p = false;
};

std::vector<Row> compute_rows() {
  std::vector<Row> rows;
  for (const auto& spec : kRows) {
    const CatalogEntry* e = find_catalog_entry(spec.entry);
    if (!e) throw Error("report: unknown catalog entry");
    const Polytope p = Polytope::anticanonical(e->rays);
    const FiniteGroup h = parse_group_spec(spec.group, p);

    Row row;
    row.name = e->name;
    row.label = spec.label;
    row.aut_order = automorphism_group(p).order();
    row.h_order = h.order();
    const AlphaValue vertex = alpha_kG(p, e->rays, h, 1);
    const AlphaValue orbit = alpha_via_orbits(p, e->rays, h, 1);
    if (vertex.value != orbit.value)
      throw Error("report: formula paths disagree on " + row.name);
    row.alpha = vertex.value;
    row.witness = vertex.witness_point;
    row.k0 = k_zero(p, e->rays, h).k0;
    row.star_p = star_p_check(p, e->rays).holds;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::string render_report(Format f) {
  const auto rows = compute_rows();
  if (f == Format::Json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
      nlohmann::ordered_json j;
      j["polytope"] = r.name;
      j["group"] = r.label;
      j["aut_order"] = r.aut_order;
      j["h_order"] = r.h_order;
      j["alpha"] = rat_to_string(r.alpha);
      j["glct"] = rat_to_string(r.alpha);
      nlohmann::ordered_json w = nlohmann::ordered_json::array();
      for (const auto& c : r.witness) w.push_back(rat_to_string(c));
      j["witness"] = w;
      j["k0"] = r.k0.str();
      j["star_p_holds"] = r.star_p;
      arr.push_back(j);
    }
    return arr.dump(2);
  }
  std::ostringstream os;
  os << std::left << std::setw(9) << "polytope" << std::setw(7) << "|Aut|" << std::setw(17)
     << "H" << std::setw(5) << "|H|" << std::setw(8) << "alpha" << std::setw(22) << "witness u"
     << std::setw(4) << "k0" << "(*_P)\n";
  os << std::string(76, '-') << "\n";
  for (const auto& r : rows) {
    os << std::left << std::setw(9) << r.name << std::setw(7) << r.aut_order << std::setw(17)
       << r.label << std::setw(5) << r.h_order << std::setw(8) << rat_to_string(r.alpha)
       << std::setw(22) << vec_to_string(r.witness) << std::setw(4) << r.k0.str()
       << (r.star_p ? "holds" : "fails") << "\n";
  }
  return os.str();
}

}  // namespace toric
