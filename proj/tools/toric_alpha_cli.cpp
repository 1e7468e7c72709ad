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

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "toric/catalog.hpp"
#include "toric/invariants.hpp"
#include "toric/json_io.hpp"
#include "toric/oracle.hpp"
#include "toric/report.hpp"
#include "toric/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;

toric::PolytopeInput resolve_input(const std::string& spec) {
  if (spec == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return toric::parse_polytope_json(buf.str());
  }
  if (const toric::CatalogEntry* e = toric::find_catalog_entry(spec)) {
    toric::PolytopeInput in;
    in.name = e->name;
    in.rays = e->rays;
    in.polytope = toric::Polytope::anticanonical(e->rays);
    return in;
  }
  std::ifstream file(spec);
  if (!file) throw toric::ParseError("no catalog entry or readable file named '" + spec + "'");
  std::ostringstream buf;
  buf << file.rdbuf();
  return toric::parse_polytope_json(buf.str());
}

int default_threads() {
  if (const char* env = std::getenv("TORIC_ALPHA_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact alpha-invariants of smooth toric Fano manifolds from fan data"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  int threads = default_threads();
  app.add_option("--threads", threads, "Worker threads for the subset search")
      ->check(CLI::PositiveNumber);

  std::string input, group_spec = "trivial";
  long k = 1, m = 1, kmax = 0;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", input, "Catalog name, JSON file path, or - for stdin")->required();
    cmd->add_option("--input", input, "Same as the positional input");
  };

  CLI::App* cmd_check = app.add_subcommand("check", "Smoothness, integrality, |Aut P|");
  add_input(cmd_check);

  CLI::App* cmd_alpha =
      app.add_subcommand("alpha", "alpha_{k,G(H)} (= glct_{k,G(H)}) by both formulas");
  add_input(cmd_alpha);
  cmd_alpha->add_option("--k", k, "Tensor power k");
  cmd_alpha->add_option("--group", group_spec, "trivial | full-aut | gens:[[..],..];[[..],..]");

  CLI::App* cmd_alpha_km = app.add_subcommand("alpha-km", "Grassmannian alpha_{k,m,(S^1)^n}");
  add_input(cmd_alpha_km);
  cmd_alpha_km->add_option("--k", k, "Tensor power k");
  cmd_alpha_km->add_option("--m", m, "Subspace dimension m")->required();

  CLI::App* cmd_star = app.add_subcommand("star-p", "The vertex-max condition on the gauge");
  add_input(cmd_star);

  CLI::App* cmd_stab = app.add_subcommand("stabilize", "Stabilization verdict for alpha_{k,m}");
  add_input(cmd_stab);
  cmd_stab->add_option("--m", m, "Subspace dimension m")->required();

  CLI::App* cmd_orbits = app.add_subcommand("orbits", "H-orbit decomposition of (1/k)M n P");
  add_input(cmd_orbits);
  cmd_orbits->add_option("--k", k, "Denominator k");
  cmd_orbits->add_option("--group", group_spec, "Group spec");

  CLI::App* cmd_ehrhart = app.add_subcommand("ehrhart", "Lattice point counts and the fitted polynomial");
  add_input(cmd_ehrhart);
  cmd_ehrhart->add_option("--kmax", kmax, "Largest dilation factor (default dim + 3)");

  CLI::App* cmd_k0 = app.add_subcommand("k0", "Divisibility threshold k0 with its witness u0");
  add_input(cmd_k0);
  cmd_k0->add_option("--group", group_spec, "Group spec");

  app.add_subcommand("report", "Full invariant table over the builtin catalog");
  CLI::App* cmd_verify = app.add_subcommand("verify", "Oracle cross-check suite (TAP output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitBadInput;
  }

  const toric::Format fmt = format == "json" ? toric::Format::Json : toric::Format::Text;

  try {
    if (cmd_check->parsed()) {
      const auto in = resolve_input(input);
      toric::CheckResult r;
      r.smooth = toric::smoothness_check(in.rays);
      r.integral = toric::integrality_check(in.polytope);
      r.aut_order = toric::automorphism_group(in.polytope).order();
      std::cout << toric::render_check(in, r, fmt);
      if (fmt == toric::Format::Json) std::cout << "\n";
      return kExitOk;
    }
    if (cmd_alpha->parsed()) {
      const auto in = resolve_input(input);
      const toric::FiniteGroup h = toric::parse_group_spec(group_spec, in.polytope);
      const auto vertex = toric::alpha_kG(in.polytope, in.rays, h, k);
      const auto orbit = toric::alpha_via_orbits(in.polytope, in.rays, h, k);
      const bool smooth = toric::smoothness_check(in.rays).smooth;
      std::cout << toric::render_alpha(in, group_spec, vertex, orbit, smooth, fmt);
      if (fmt == toric::Format::Json) std::cout << "\n";
      return kExitOk;
    }
    if (cmd_alpha_km->parsed()) {
      const auto in = resolve_input(input);
      try {
        toric::SearchStats stats;
        const auto r = toric::alpha_km(in.polytope, in.rays, k, m, threads, &stats);
        std::cout << toric::render_alpha_km(in, r, stats, fmt);
      } catch (const toric::NoInvariantSubspaceError& e) {
        std::cout << toric::render_alpha_km_infinite(in, k, m, e.what(), fmt);
      }
      if (fmt == toric::Format::Json) std::cout << "\n";
      return kExitOk;
    }
    if (cmd_star->parsed()) {
      const auto in = resolve_input(input);
      std::cout << toric::render_star_p(in, toric::star_p_check(in.polytope, in.rays), fmt);
      if (fmt == toric::Format::Json) std::cout << "\n";
      return kExitOk;
    }
    if (cmd_stab->parsed()) {
      const auto in = resolve_input(input);
      std::cout << toric::render_stabilize(in, toric::stabilization_report(in.polytope, in.rays, m),
                                           fmt);
      if (fmt == toric::Format::Json) std::cout << "\n";
      return kExitOk;
    }
    if (cmd_orbits->parsed()) {
      const auto in = resolve_input(input);
      const toric::FiniteGroup h = toric::parse_group_spec(group_spec, in.polytope);
      std::cout << toric::render_orbits(in, toric::orbit_decomposition(h, in.polytope, k),
                                        h.order(), fmt);
      if (fmt == toric::Format::Json) std::cout << "\n";
      return kExitOk;
    }
    if (cmd_ehrhart->parsed()) {
      const auto in = resolve_input(input);
      const long effective_kmax = kmax > 0 ? kmax : long(in.polytope.dim()) + 3;
      std::cout << toric::render_ehrhart(in, toric::ehrhart_fit_check(in.polytope, effective_kmax),
                                         fmt);
      if (fmt == toric::Format::Json) std::cout << "\n";
      return kExitOk;
    }
    if (cmd_k0->parsed()) {
      const auto in = resolve_input(input);
      const toric::FiniteGroup h = toric::parse_group_spec(group_spec, in.polytope);
      std::cout << toric::render_k0(in, toric::k_zero(in.polytope, in.rays, h), h.order(), fmt);
      if (fmt == toric::Format::Json) std::cout << "\n";
      return kExitOk;
    }
    if (cmd_verify->parsed()) {
      const int failures = toric::run_verify(std::cout);
      return failures == 0 ? kExitOk : kExitVerifyFailed;
    }
    // report
    std::cout << toric::render_report(fmt);
    if (fmt == toric::Format::Json) std::cout << "\n";
    return kExitOk;
  } catch (const toric::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const toric::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
}
