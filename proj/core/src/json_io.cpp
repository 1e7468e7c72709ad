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

#include "toric/json_io.hpp"

#include <json.hpp>

#include <sstream>

namespace toric {

namespace {

using Json = nlohmann::ordered_json;

Json vec_json(const RatVec& v) {
  Json arr = Json::array();
  for (const auto& c : v) arr.push_back(rat_to_string(c));
  return arr;
}

Json points_json(const std::vector<RatVec>& pts) {
  Json arr = Json::array();
  for (const auto& p : pts) arr.push_back(vec_json(p));
  return arr;
}

RatVec parse_vec(const Json& arr) {
  if (!arr.is_array() || arr.empty()) throw ParseError("expected a coordinate array");
  std::vector<Rat> coords;
  for (const auto& c : arr) {
    if (c.is_number_integer())
      coords.emplace_back(Rat(c.get<long long>()));
    else if (c.is_string())
      coords.emplace_back(parse_rat(c.get<std::string>()));
    else
      throw ParseError("coordinates must be integers or rational strings");
  }
  return RatVec(std::move(coords));
}

Json parse_document(const std::string& text) {
  Json doc = Json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) throw ParseError("malformed JSON");
  if (!doc.is_object()) throw ParseError("expected a JSON object");
  return doc;
}

}  // namespace

PolytopeInput parse_polytope_json(const std::string& text) {
  const Json doc = parse_document(text);
  PolytopeInput in;
  in.name = doc.value("name", std::string("input"));
  if (doc.contains("rays")) {
    if (!doc["rays"].is_array() || doc["rays"].empty())
      throw ParseError("\"rays\" must be a non-empty array");
    std::vector<RatVec> rays;
    for (const auto& r : doc["rays"]) rays.push_back(parse_vec(r));
    const std::size_t dim = doc.contains("dim") ? doc["dim"].get<std::size_t>() : rays[0].dim();
    try {
      in.rays = FanRays(dim, std::move(rays));
      in.polytope = Polytope::anticanonical(in.rays);
    } catch (const Error& e) {
      throw ParseError(std::string("invalid fan: ") + e.what());
    }
    return in;
  }
  if (doc.contains("vertices")) {
    if (!doc["vertices"].is_array() || doc["vertices"].empty())
      throw ParseError("\"vertices\" must be a non-empty array");
    std::vector<RatVec> verts;
    for (const auto& v : doc["vertices"]) verts.push_back(parse_vec(v));
    const std::size_t dim = doc.contains("dim") ? doc["dim"].get<std::size_t>() : verts[0].dim();
    try {
      in.polytope = Polytope::from_vertices(dim, verts);
      in.rays = rays_from_polytope(in.polytope);
    } catch (const Error& e) {
      throw ParseError(std::string("invalid vertex input: ") + e.what());
    }
    return in;
  }
  throw ParseError("input needs either \"rays\" or \"vertices\"");
}

std::string polytope_to_json(const std::string& name, const FanRays& rays) {
  Json doc;
  doc["name"] = name;
  doc["dim"] = rays.dim;
  Json arr = Json::array();
  for (const auto& v : rays.rays) {
    Json row = Json::array();
    for (const auto& c : v) row.push_back(numerator(c).convert_to<long long>());
    arr.push_back(row);
  }
  doc["rays"] = arr;
  return doc.dump(2);
}

FiniteGroup parse_group_spec(const std::string& spec, const Polytope& p) {
  if (spec == "trivial") return trivial_group(p.dim());
  if (spec == "full-aut") return automorphism_group(p);

  std::vector<std::string> matrices;
  if (spec.rfind("gens:", 0) == 0) {
    std::string body = spec.substr(5);
    std::size_t start = 0;
    while (start <= body.size()) {
      const std::size_t semi = body.find(';', start);
      matrices.push_back(body.substr(start, semi == std::string::npos ? semi : semi - start));
      if (semi == std::string::npos) break;
      start = semi + 1;
    }
  } else {
    const Json doc = parse_document(spec);
    if (!doc.contains("generators") || !doc["generators"].is_array())
      throw ParseError("group JSON needs a \"generators\" array");
    for (const auto& g : doc["generators"]) matrices.push_back(g.dump());
  }

  std::vector<UnimodularMap> gens;
  for (const auto& text : matrices) {
    Json grid = Json::parse(text, nullptr, false);
    if (grid.is_discarded() || !grid.is_array() || grid.size() != p.dim())
      throw ParseError("generator must be a " + std::to_string(p.dim()) + "x" +
                       std::to_string(p.dim()) + " integer matrix");
    RatMat m(p.dim(), p.dim());
    for (std::size_t r = 0; r < p.dim(); ++r) {
      if (!grid[r].is_array() || grid[r].size() != p.dim())
        throw ParseError("generator rows must have length " + std::to_string(p.dim()));
      for (std::size_t c = 0; c < p.dim(); ++c) {
        if (!grid[r][c].is_number_integer()) throw ParseError("generator entries must be integers");
        m(r, c) = Rat(grid[r][c].get<long long>());
      }
    }
    try {
      gens.push_back(UnimodularMap::validated(std::move(m)));
    } catch (const Error& e) {
      throw ParseError(std::string("invalid generator: ") + e.what());
    }
  }
  const FiniteGroup aut = automorphism_group(p);
  for (const auto& g : gens)
    if (!aut.contains(g))
      throw ParseError("generator is not an automorphism of the polytope");
  return subgroup_closure(gens, aut);
}

namespace {

Json alpha_value_json(const AlphaValue& a, const char* invariant) {
  Json j;
  j["invariant"] = invariant;
  j["value"] = rat_to_string(a.value);
  if (a.path == FormulaPath::SubsetSearch)
    j["witness"] = points_json(a.witness_subset);
  else
    j["witness"] = vec_json(a.witness_point);
  j["path"] = formula_path_name(a.path);
  j["k"] = a.k;
  if (a.m > 0) j["m"] = a.m;
  j["group_order"] = a.group_order;
  return j;
}

}  // namespace

std::string render_check(const PolytopeInput& in, const CheckResult& r, Format f) {
  if (f == Format::Json) {
    Json j;
    j["name"] = in.name;
    j["dim"] = in.polytope.dim();
    j["smooth"] = r.smooth.smooth;
    if (!r.smooth.smooth) j["smooth_failure"] = r.smooth.reason;
    j["integral"] = r.integral;
    j["vertices"] = points_json(in.polytope.vertices());
    j["aut_order"] = r.aut_order;
    return j.dump(2);
  }
  std::ostringstream os;
  os << in.name << ": dim " << in.polytope.dim() << ", " << in.polytope.vertices().size()
     << " vertices\n";
  os << "  smoothness:  " << (r.smooth.smooth ? "pass" : ("FAIL (" + r.smooth.reason + ")"))
     << "\n";
  os << "  integrality: " << (r.integral ? "pass" : "FAIL") << "\n";
  os << "  |Aut P| = " << r.aut_order << "\n";
  return os.str();
}

std::string render_alpha(const PolytopeInput& in, const std::string& group_spec,
                         const AlphaValue& vertex_path, const AlphaValue& orbit_path,
                         bool smooth, Format f) {
  // Informational only: alpha > n/(n+1) is the classical sufficient bound for
  // a Kahler-Einstein metric.
  const Rat ke_threshold =
      make_rat(Int(in.polytope.dim()), Int(in.polytope.dim() + 1));
  const bool exceeds_ke = vertex_path.value > ke_threshold;
  if (f == Format::Json) {
    Json j = alpha_value_json(vertex_path, "alpha_kG");
    j["name"] = in.name;
    j["group"] = group_spec;
    j["glct_kG"] = rat_to_string(vertex_path.value);  // the same number by design
    j["orbit_path"] = alpha_value_json(orbit_path, "alpha_kG");
    j["paths_agree"] = vertex_path.value == orbit_path.value;
    j["ke_bound"] = {{"threshold", rat_to_string(ke_threshold)}, {"exceeds", exceeds_ke}};
    if (!smooth) j["warning"] = "input fan is not smooth; formulas are outside their hypotheses";
    return j.dump(2);
  }
  std::ostringstream os;
  os << "alpha_{k,G(H)}(" << in.name << ", H=" << group_spec << ", k=" << vertex_path.k
     << ") = " << rat_to_string(vertex_path.value) << "\n";
  os << "glct_{k,G(H)} = " << rat_to_string(vertex_path.value) << " (same invariant)\n";
  os << "  witness u = " << vec_to_string(vertex_path.witness_point) << ", |H| = "
     << vertex_path.group_order << "\n";
  os << "  orbit-formula check: " << rat_to_string(orbit_path.value) << " at "
     << vec_to_string(orbit_path.witness_point)
     << (vertex_path.value == orbit_path.value ? " (agrees)" : " (DISAGREES)") << "\n";
  os << "  alpha > " << rat_to_string(ke_threshold) << " (Kahler-Einstein sufficient bound): "
     << (exceeds_ke ? "yes" : "no") << "\n";
  if (!smooth) os << "  warning: fan is not smooth; formulas are outside their hypotheses\n";
  return os.str();
}

std::string render_alpha_km(const PolytopeInput& in, const AlphaValue& r,
                            const SearchStats& stats, Format f) {
  if (f == Format::Json) {
    Json j = alpha_value_json(r, "alpha_km");
    j["name"] = in.name;
    j["search"] = {{"nodes", stats.nodes}, {"pruned", stats.pruned}, {"lp_calls", stats.lp_calls}};
    return j.dump(2);
  }
  std::ostringstream os;
  os << "alpha_{k,m,(S^1)^n}(" << in.name << ", k=" << r.k << ", m=" << r.m
     << ") = " << rat_to_string(r.value) << "\n";
  os << "  witness subset:";
  for (const auto& p : r.witness_subset) os << " " << vec_to_string(p);
  os << "\n  search: " << stats.nodes << " nodes, " << stats.pruned << " pruned, "
     << stats.lp_calls << " LP calls\n";
  return os.str();
}

std::string render_alpha_km_infinite(const PolytopeInput& in, long k, long m,
                                     const std::string& reason, Format f) {
  if (f == Format::Json) {
    Json j;
    j["invariant"] = "alpha_km";
    j["name"] = in.name;
    j["k"] = k;
    j["m"] = m;
    j["outcome"] = "infinite";
    j["reason"] = reason;
    return j.dump(2);
  }
  std::ostringstream os;
  os << "alpha_{k,m,(S^1)^n}(" << in.name << ", k=" << k << ", m=" << m
     << ") = infinity\n  " << reason << "\n";
  return os.str();
}

std::string render_star_p(const PolytopeInput& in, const StarPReport& r, Format f) {
  if (f == Format::Json) {
    Json j;
    j["name"] = in.name;
    j["condition"] = "star_P";
    j["holds"] = r.holds;
    j["max_gauge"] = rat_to_string(r.max_gauge);
    j["argmax_vertices"] = points_json(r.argmax_vertices);
    if (r.flat_edge) j["flat_edge"] = points_json(r.flat_edge_points);
    return j.dump(2);
  }
  std::ostringstream os;
  os << "(*_P) on " << in.name << ": " << (r.holds ? "holds" : "fails") << "\n";
  os << "  max gauge over P = " << rat_to_string(r.max_gauge) << ", attained at "
     << r.argmax_vertices.size() << " vertices\n";
  if (r.flat_edge)
    os << "  flat edge witness: " << vec_to_string(r.flat_edge_points[0]) << " -- "
       << vec_to_string(r.flat_edge_points[1]) << "\n";
  return os.str();
}

std::string render_stabilize(const PolytopeInput& in, const StabilizationReport& r, Format f) {
  if (f == Format::Json) {
    Json j;
    j["name"] = in.name;
    j["m"] = r.m;
    j["verdict"] = stabilization_verdict_name(r.verdict);
    j["alpha"] = rat_to_string(r.alpha);
    j["star_p_holds"] = r.star.holds;
    if (r.verdict != StabilizationVerdict::StrictForAllK) j["k1"] = r.k1;
    Json samples = Json::array();
    for (const auto& [k, v] : r.samples) samples.push_back({{"k", k}, {"value", rat_to_string(v)}});
    j["samples"] = samples;
    return j.dump(2);
  }
  std::ostringstream os;
  os << "stabilization of alpha_{k," << r.m << "} on " << in.name << ": ";
  switch (r.verdict) {
    case StabilizationVerdict::StabilizesAllK:
      os << "stabilizes: alpha_{k,1} = alpha for every k\n";
      break;
    case StabilizationVerdict::StrictForAllK:
      os << "strict: alpha_{k,m} > alpha for all k\n";
      break;
    case StabilizationVerdict::StabilizesEventually:
      os << "stabilizes: alpha_{k,m} = alpha for all large k (first window at k = " << r.k1
         << ")\n";
      break;
  }
  os << "  alpha = " << rat_to_string(r.alpha) << ", (*_P) "
     << (r.star.holds ? "holds" : "fails") << "\n";
  for (const auto& [k, v] : r.samples)
    os << "  alpha_{" << k << "," << r.m << "} = " << rat_to_string(v) << "\n";
  return os.str();
}

std::string render_orbits(const PolytopeInput& in, const OrbitDecomposition& d,
                          std::size_t group_order, Format f) {
  if (f == Format::Json) {
    Json j;
    j["name"] = in.name;
    j["k"] = d.k;
    j["group_order"] = group_order;
    j["orbit_count"] = d.orbits.size();
    Json arr = Json::array();
    for (const auto& orbit : d.orbits) arr.push_back(points_json(orbit));
    j["orbits"] = arr;
    return j.dump(2);
  }
  std::ostringstream os;
  os << d.orbits.size() << " orbits of (1/" << d.k << ")M n P under H (|H| = " << group_order
     << ") on " << in.name << ":\n";
  for (std::size_t i = 0; i < d.orbits.size(); ++i) {
    os << "  O_" << (i + 1) << " (size " << d.orbits[i].size() << "):";
    for (const auto& p : d.orbits[i]) os << " " << vec_to_string(p);
    os << "\n";
  }
  return os.str();
}

std::string render_ehrhart(const PolytopeInput& in, const EhrhartFitReport& r, Format f) {
  if (f == Format::Json) {
    Json j;
    j["name"] = in.name;
    Json counts = Json::array();
    for (std::size_t i = 0; i < r.counts.size(); ++i)
      counts.push_back({{"k", i + 1}, {"count", r.counts[i].str()}});
    j["counts"] = counts;
    Json coeffs = Json::array();
    for (const auto& c : r.coefficients) coeffs.push_back(rat_to_string(c));
    j["polynomial"] = coeffs;
    j["volume"] = rat_to_string(r.volume);
    j["pass"] = r.pass;
    if (!r.pass) j["detail"] = r.detail;
    return j.dump(2);
  }
  std::ostringstream os;
  os << "Ehrhart counts of " << in.name << ":";
  for (std::size_t i = 0; i < r.counts.size(); ++i) os << " E(" << (i + 1) << ")=" << r.counts[i];
  os << "\n  fitted polynomial (low to high):";
  for (const auto& c : r.coefficients) os << " " << rat_to_string(c);
  os << "\n  volume = " << rat_to_string(r.volume) << ", fit "
     << (r.pass ? "consistent" : ("INCONSISTENT: " + r.detail)) << "\n";
  return os.str();
}

std::string render_k0(const PolytopeInput& in, const KZeroResult& r, std::size_t group_order,
                      Format f) {
  if (f == Format::Json) {
    Json j;
    j["name"] = in.name;
    j["group_order"] = group_order;
    j["k0"] = r.k0.str();
    j["u0"] = vec_json(r.u0);
    return j.dump(2);
  }
  std::ostringstream os;
  os << "k0(" << in.name << ", |H| = " << group_order << ") = " << r.k0 << " with u0 = "
     << vec_to_string(r.u0) << "\n";
  return os.str();
}

}  // namespace toric
