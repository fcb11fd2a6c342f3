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

// Acceptance criteria 1-10: one PASS/FAIL line each, exit 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "eigs/degree.hpp"
#include "eigs/distance.hpp"
#include "eigs/lab.hpp"
#include "eigs/report.hpp"
#include "eigs/verify.hpp"
#include "fixtures.hpp"

namespace {

using namespace eigs;
using test::load;

struct Outcome {
  bool ok = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = secs < limit_s;
  const bool pass = o.ok && in_time;
  if (!pass) ++failures;
  std::printf("%s %2d %s [%.3fs < %gs%s] %s\n", pass ? "PASS" : "FAIL", id, title, secs, limit_s,
              in_time ? "" : " EXCEEDED", o.detail.c_str());
  std::fflush(stdout);
}

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

const double kLog5 = std::log(5.0) / std::log(2.0);

// slope of the branch belonging to the class with the given effective rate
double slope_for_rate(const Simulation& sim, double rate) {
  for (std::size_t k = 0; k < sim.analysis.classes.size(); ++k)
    if (rho_equal(sim.analysis.classes[k].eff_rate, rate))
      for (const RegressionResult& r : sim.regressions)
        if (r.branch == branch_name(static_cast<int>(k)) && !r.sparse) return r.slope;
  return std::nan("");
}

}  // namespace

int main() {
  criterion(1, "splendor fractal spectrum", 1.0, [] {
    const AnalysisReport rep = analyze(load("splendor"));
    const auto& d = rep.json["distance"];
    const auto s = d["spectrum"].get<std::vector<double>>();
    const bool ok = s.size() == 2 && near(s[0], 2.0, 1e-9) && near(s[1], kLog5, 1e-9) &&
                    d["multifractal"].get<bool>() && d["bddm"].get<bool>();
    return Outcome{ok, "S=" + d["spectrum"].dump() + " multifractal=" + d["multifractal"].dump() +
                           " bddm=" + d["bddm"].dump()};
  });

  criterion(2, "splendor degree spectrum", 1.0, [] {
    const AnalysisReport rep = analyze(load("splendor"));
    const auto& g = rep.json["degree"];
    const auto D = g["spectrum"].get<std::vector<double>>();
    const auto S = rep.json["distance"]["spectrum"].get<std::vector<double>>();
    bool equal = D.size() == S.size();
    for (std::size_t i = 0; equal && i < D.size(); ++i) equal = near(D[i], S[i], 1e-9);
    const bool ok = D.size() == 2 && near(D[0], 2.0, 1e-9) && near(D[1], kLog5, 1e-9) && g["bedm"].get<bool>() &&
                    g["multiscale_free"].get<bool>() && equal;
    return Outcome{ok, "D=" + g["spectrum"].dump() + " bedm=" + g["bedm"].dump() +
                           " multiscale_free=" + g["multiscale_free"].dump() + " D==S " + (equal ? "yes" : "no")};
  });

  criterion(3, "broken DHL degree dimension", 1.0, [] {
    const AnalysisReport rep = analyze(load("broken_dhl"));
    const auto& g = rep.json["degree"];
    const double dim = g["dimension"].is_number() ? g["dimension"].get<double>() : -1;
    const bool ok = near(dim, 1.584962500721156, 1e-9) && g["scale_free"].get<bool>() && !g["bedm"].get<bool>();
    return Outcome{ok, "dim=" + num(dim) + " scale_free=" + g["scale_free"].dump() + " bedm=" + g["bedm"].dump()};
  });

  criterion(4, "classical DHL dimensions", 1.0, [] {
    const AnalysisReport rep = analyze(load("classical_dhl"));
    const auto& c = rep.json["distance"]["colours"][0];
    const double dh = c["dim_H"].is_number() ? c["dim_H"].get<double>() : -1;
    const auto& g = rep.json["degree"];
    const double dd = g["dimension"].is_number() ? g["dimension"].get<double>() : -1;
    return Outcome{near(dh, 2.0, 1e-9) && near(dd, 2.0, 1e-9), "dim_H=" + num(dh) + " degree=" + num(dd)};
  });

  criterion(5, "broken DHL branch regression n=7, n=11", 10.0, [] {
    const IgsSpec s = load("broken_dhl");
    const double s7 = slope_for_rate(simulate(s, 7), 3.0);
    const double s11 = slope_for_rate(simulate(s, 11), 3.0);
    return Outcome{near(s7, 1.75, 0.10) && near(s11, 1.63, 0.10),
                   "n=7 slope " + num(s7) + " (1.75), n=11 slope " + num(s11) + " (1.63)"};
  });

  criterion(6, "splendor branch regression n=11", 10.0, [] {
    const Simulation sim = simulate(load("splendor"), 11);
    const double a = slope_for_rate(sim, 4.0), b = slope_for_rate(sim, 5.0);
    return Outcome{near(a, 1.95, 0.10) && near(b, 2.34, 0.10),
                   "slopes " + num(a) + " (1.95), " + num(b) + " (2.34)"};
  });

  criterion(7, "oracle suite k=5", 60.0, [] {
    std::vector<std::pair<std::string, IgsSpec>> corpus{
        {"binary_tree", load("binary_tree")}, {"splendor", load("splendor")}, {"broken_dhl", load("broken_dhl")}};
    for (std::uint64_t seed = 1; seed <= 25; ++seed)
      corpus.emplace_back("seed " + std::to_string(seed), random_spec({.seed = seed}));
    VerifyOptions o;
    o.n_max = 5;
    std::int64_t cases = 0;
    for (const auto& [name, spec] : corpus) {
      const VerifyReport r = verify(spec, o);
      for (const OracleCheck& c : r.checks) {
        if (c.status == CheckStatus::kFail) return Outcome{false, name + " " + c.name + ": " + c.detail};
        if (c.status == CheckStatus::kSkipped && c.name != "distance_blocks" && c.name != "degree_blocks")
          return Outcome{false, name + " " + c.name + " skipped: " + c.detail};
        cases += c.cases;
      }
    }
    return Outcome{true, std::to_string(corpus.size()) + " specs, " + std::to_string(cases) + " identities"};
  });

  criterion(8, "block-structure properties", 60.0, [] {
    std::vector<IgsSpec> corpus{load("binary_tree"), load("splendor"), load("broken_dhl")};
    for (std::uint64_t seed = 1; seed <= 25; ++seed) corpus.push_back(random_spec({.seed = seed}));
    std::int64_t matrices = 0;
    for (const IgsSpec& s : corpus) {
      const BlockCheck d = check_distance_blocks(s, 1 << 20);
      const BlockCheck n = check_degree_blocks(s);
      if (!d.ok) return Outcome{false, d.detail};
      if (!n.ok) return Outcome{false, n.detail};
      if (d.sampled) return Outcome{false, "family too large to enumerate"};
      matrices += d.matrices;
    }
    return Outcome{true, std::to_string(matrices) + " assembled matrices, 0 violations"};
  });

  criterion(9, "assumption detectors", 5.0, [] {
    const auto tree = analyze_distance(load("binary_tree"));
    const auto broken = analyze_distance(load("broken_dhl"));
    const auto sp = analyze_distance(load("splendor"));
    const bool ok = !tree.layer(1).stability.stable && !broken.layer(1).stability.stable &&
                    sp.layer(2).stability.stable && sp.layer(3).stability.stable && !sp.layer(1).stability.stable &&
                    near(sp.layer(1).lambda_D, 2.0, 1e-9);
    std::ostringstream d;
    d << "tree(1) " << (tree.layer(1).stability.stable ? "stable" : "violated") << ", broken(1) "
      << (broken.layer(1).stability.stable ? "stable" : "violated") << ", splendor(1,2,3) "
      << (sp.layer(1).stability.stable ? "stable" : "violated") << "/"
      << (sp.layer(2).stability.stable ? "stable" : "violated") << "/"
      << (sp.layer(3).stability.stable ? "stable" : "violated") << ", splendor lambda_D(1)=" << num(sp.layer(1).lambda_D);
    return Outcome{ok, d.str()};
  });

  criterion(10, "fixed-point certificates", 10.0, [] {
    std::vector<IgsSpec> corpus{load("binary_tree"), load("splendor"), load("broken_dhl"), load("classical_dhl")};
    for (std::uint64_t seed = 1; seed <= 25; ++seed) corpus.push_back(random_spec({.seed = seed}));
    double worst = 0;
    int stable = 0;
    for (const IgsSpec& s : corpus) {
      const ChoiceFamily f = choice_family(s);
      for (int j = 1; j <= s.colours; ++j) {
        const StabilityReport r = check_primitive_stability(f, j);
        if (!r.stable) continue;
        ++stable;
        if (!r.certificate_residual) return Outcome{false, "stable colour without a certificate"};
        worst = std::max(worst, *r.certificate_residual);
      }
    }
    return Outcome{stable > 0 && worst < 1e-9, std::to_string(stable) + " stable layers, max residual " + num(worst)};
  });

  std::printf("%s\n", failures ? "acceptance: FAILED" : "acceptance: all criteria pass");
  return failures ? 1 : 0;
}
