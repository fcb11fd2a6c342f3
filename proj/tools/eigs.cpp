// Copyright 2026 The eigs Authors
//
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

// eigs: analyze edge iterated graph systems from the command line.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "eigs/engine.hpp"
#include "eigs/errors.hpp"
#include "eigs/lab.hpp"
#include "eigs/model.hpp"
#include "eigs/report.hpp"
#include "eigs/verify.hpp"

namespace {

enum Exit { kOk = 0, kDomain = 1, kParse = 2, kHardFail = 3, kBudget = 4, kNotApplicable = 5 };

struct Globals {
  std::int64_t budget_edges = eigs::kDefaultEdgeBudget;
  std::optional<double> tolerance;
  std::uint64_t seed = 1;
};

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  return out;
}

int cmd_validate(const std::string& path) {
  const eigs::IgsSpec spec = eigs::load_spec(path);
  const auto violations = eigs::validate(spec);
  for (const auto& v : violations) {
    if (v.colour) std::cout << "rule " << v.colour << ": ";
    std::cout << v.message << "\n";
  }
  if (violations.empty()) std::cout << "valid\n";
  return violations.empty() ? kOk : kDomain;
}

int cmd_analyze(const std::string& path, const std::string& out_path, const Globals& g) {
  const eigs::IgsSpec spec = eigs::load_spec(path);
  eigs::ReportOptions opt;
  if (g.tolerance) opt.distance.tolerance = *g.tolerance;
  const eigs::AnalysisReport rep = eigs::analyze(spec, opt);
  if (out_path.empty()) {
    std::cout << rep.text();
  } else {
    open_out(out_path) << rep.text();
  }
  return rep.hard_failure ? kHardFail : kOk;
}

int cmd_generate(const std::string& path, int n, const std::string& prefix, const Globals& g) {
  const eigs::IgsSpec spec = eigs::load_spec(path);
  const eigs::GeneratedGraph graph = eigs::iterate(spec, n, g.budget_edges);
  {
    std::ofstream out = open_out(prefix + ".edges");
    eigs::write_edge_list(graph, out);
  }
  {
    std::ofstream out = open_out(prefix + ".vertices");
    eigs::write_provenance(graph, out);
  }
  std::cout << graph.vertices.size() << " vertices, " << graph.edges.size() << " edges\n";
  return kOk;
}

int cmd_simulate(const std::string& path, int n, const std::string& dir) {
  const eigs::IgsSpec spec = eigs::load_spec(path);
  const eigs::Simulation sim = eigs::simulate(spec, n);
  std::filesystem::create_directories(dir);
  const std::string stem = std::filesystem::path(path).stem().string() + "_n" + std::to_string(n);
  const std::filesystem::path base(dir);
  {
    std::ofstream out = open_out((base / (stem + "_levels.csv")).string());
    eigs::write_levels_csv(sim.levels, out);
  }
  {
    std::ofstream out = open_out((base / (stem + "_regression.csv")).string());
    eigs::write_regressions_csv(sim.regressions, out);
  }
  {
    std::ofstream out = open_out((base / (stem + ".svg")).string());
    eigs::write_plot_svg(sim.levels, sim.regressions, stem, out);
  }
  for (const auto& r : sim.regressions)
    std::cout << r.branch << " slope " << r.slope << " r2 " << r.r2 << " points " << r.points
              << (r.sparse ? " (sparse)" : "") << "\n";
  return kOk;
}

int cmd_verify(const std::string& path, int n_max, const Globals& g) {
  const eigs::IgsSpec spec = path.empty() ? eigs::random_spec({.seed = g.seed}) : eigs::load_spec(path);
  eigs::VerifyOptions opt;
  opt.n_max = n_max;
  opt.budget_edges = g.budget_edges;
  const eigs::VerifyReport rep = eigs::verify(spec, opt);
  for (const auto& c : rep.checks) {
    std::cout << c.name << ": " << eigs::to_string(c.status) << " (" << c.cases << " cases)";
    if (c.status == eigs::CheckStatus::kSkipped) std::cout << " " << c.detail;
    std::cout << "\n";
  }
  if (const auto* f = rep.first_failure()) {
    nlohmann::ordered_json cx;
    cx["check"] = f->name;
    cx["counterexample"] = f->detail;
    cx["spec_digest"] = eigs::spec_digest(spec);
    std::cout << cx.dump() << "\n";
    return kDomain;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"eigs: fractal and degree spectra of edge iterated graph systems"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--budget-edges", g.budget_edges, "edge budget for materialized graphs")
      ->check(CLI::Range(std::int64_t{1}, eigs::kMaxEdgeBudget));
  app.add_option("--tolerance", g.tolerance, "relative tolerance for spectral radius comparisons");
  app.add_option("--seed", g.seed, "seed for random specs");

  std::string spec_path, out_path, plots_dir = "plots";
  int n = 0, n_max = 5;

  auto* validate = app.add_subcommand("validate", "check a spec for well-formedness");
  validate->add_option("spec", spec_path)->required();
  auto* analyze = app.add_subcommand("analyze", "full spectral analysis report");
  analyze->add_option("spec", spec_path)->required();
  analyze->add_option("--out", out_path, "report path (default stdout)");
  auto* generate = app.add_subcommand("generate", "materialize generation n");
  generate->add_option("spec", spec_path)->required();
  generate->add_option("n", n)->required()->check(CLI::NonNegativeNumber);
  generate->add_option("--out", out_path, "output prefix")->required();
  auto* simulate = app.add_subcommand("simulate", "scaled degree levels and branch regressions");
  simulate->add_option("spec", spec_path)->required();
  simulate->add_option("n", n)->required()->check(CLI::NonNegativeNumber);
  simulate->add_option("--plots", plots_dir, "output directory");
  auto* verify = app.add_subcommand("verify", "cross-check closed forms against simulation");
  verify->add_option("spec", spec_path, "spec (default: random spec from --seed)");
  verify->add_option("--n-max", n_max)->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kParse;
  }

  try {
    if (*validate) return cmd_validate(spec_path);
    if (*analyze) return cmd_analyze(spec_path, out_path, g);
    if (*generate) return cmd_generate(spec_path, n, out_path, g);
    if (*simulate) return cmd_simulate(spec_path, n, plots_dir);
    if (*verify) return cmd_verify(spec_path, n_max, g);
  } catch (const eigs::SpecError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const eigs::BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const eigs::NotApplicable& e) {
    std::cerr << "not applicable: " << e.what() << "\n";
    return kNotApplicable;
  } catch (const eigs::AnalysisError& e) {
    std::cerr << "analysis failed: " << e.what() << "\n";
    return kHardFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomain;
  }
  return kOk;
}
