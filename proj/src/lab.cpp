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

#include "eigs/lab.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>

#include <Eigen/Dense>

#include "eigs/distance.hpp"

namespace eigs {

namespace {

std::string fmt(double v, const char* spec = "%.12g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

BigInt max_degree(const Histogram& hist) {
  return hist.empty() ? BigInt(0) : hist.rbegin()->first;
}

}  // namespace

std::string branch_name(int label) {
  if (label >= 0) return "class-" + std::to_string(label + 1);
  if (label == kSuppressed) return "suppressed";
  return "unclassified";
}

std::vector<Level> scaled_levels(const Histogram& hist) {
  std::vector<Level> out;
  const BigInt delta = max_degree(hist);
  for (auto it = hist.rbegin(); it != hist.rend(); ++it) {
    if (it->first.is_zero()) continue;
    out.push_back({it->first, delta, it->second, kUnlabelled});
  }
  return out;
}

std::vector<Level> scaled_levels(const LabelledHistogram& hist) {
  std::vector<Level> out;
  if (hist.empty()) return out;
  const BigInt delta = hist.rbegin()->first;
  for (auto it = hist.rbegin(); it != hist.rend(); ++it) {
    if (it->first.is_zero()) continue;
    Level l{it->first, delta, BigInt(0), kUnlabelled};
    BigInt best = -1;
    for (const auto& [label, c] : it->second) {
      l.count += c;
      if (c > best) {
        best = c;
        l.label = label;
      }
    }
    out.push_back(std::move(l));
  }
  return out;
}

std::vector<Level> scaled_levels(const IgsSpec& spec, int n) { return scaled_levels(combinatorial_histogram(spec, n)); }

RegressionResult ols(const std::vector<double>& x, const std::vector<double>& y) {
  RegressionResult r;
  r.points = static_cast<int>(x.size());
  if (x.size() < 2) {
    r.sparse = true;
    return r;
  }
  Eigen::MatrixXd A(x.size(), 2);
  Eigen::VectorXd b(y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    A(i, 0) = x[i];
    A(i, 1) = 1.0;
    b(i) = y[i];
  }
  const Eigen::Vector2d coef = A.colPivHouseholderQr().solve(b);
  r.slope = coef(0);
  r.intercept = coef(1);
  const double mean = b.mean();
  const double ss_tot = (b.array() - mean).square().sum();
  const double ss_res = (A * coef - b).squaredNorm();
  r.r2 = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0;
  return r;
}

std::vector<RegressionResult> branch_regression(const std::vector<Level>& levels, const std::vector<double>& alphas,
                                                double lambda_U, double lattice_tolerance) {
  const double logL = std::log(lambda_U);
  std::map<int, std::pair<std::vector<double>, std::vector<double>>> points;
  for (const Level& l : levels) {
    int label = l.label;
    if (label == kUnlabelled) {
      label = kUnclassified;
      double best = lattice_tolerance * logL;
      const double log_ell = -l.neg_log_ell();
      for (std::size_t k = 0; k < alphas.size(); ++k) {
        const double m = std::round((std::log(alphas[k]) - log_ell) / logL);
        const double gap = std::abs(log_ell - (std::log(alphas[k]) - m * logL));
        if (gap <= best) {
          best = gap;
          label = static_cast<int>(k);
        }
      }
    }
    points[label].first.push_back(l.neg_log_ell());
    points[label].second.push_back(log(l.count));
  }
  std::vector<int> order;
  for (const auto& [label, p] : points)
    if (label >= 0) order.push_back(label);
  for (int special : {kSuppressed, kUnclassified})
    if (points.count(special)) order.push_back(special);
  std::vector<RegressionResult> out;
  for (int label : order) {
    const auto& [x, y] = points[label];
    RegressionResult r = ols(x, y);
    r.branch = branch_name(label);
    if (r.points < 4) {
      r.sparse = true;
      r.slope = r.intercept = r.r2 = 0.0;
    }
    out.push_back(r);
  }
  return out;
}

Simulation simulate(const IgsSpec& spec, int n) {
  Simulation s;
  s.generation = n;
  s.analysis = analyze_degree(spec);
  if (!s.analysis.applicable) throw NotApplicable(s.analysis.reason);
  s.levels = scaled_levels(labelled_histogram(spec, s.analysis, n));
  std::vector<double> alphas;
  for (const DegreeClass& K : s.analysis.classes) alphas.push_back(K.alpha);
  s.regressions = branch_regression(s.levels, alphas, s.analysis.lambda_U);
  return s;
}

DistanceFit distance_growth_fit(const IgsSpec& spec, int n_max, std::int64_t budget_edges) {
  const IgsSpec planted = spec.has_planted_pair() ? spec : with_initial_colour(spec, spec.initial_colour);
  DistanceFit fit;
  // projected size check up front so no partial work is done
  iterate(planted, 0, budget_edges);
  if (projected_edges(planted, n_max) > BigInt(std::min(budget_edges, kMaxEdgeBudget)))
    throw BudgetError("generation " + std::to_string(n_max) + " needs " + projected_edges(planted, n_max).str() +
                      " edges");
  GeneratedGraph g = initial_graph(planted);
  std::vector<double> x, y;
  for (int n = 0; n <= n_max; ++n) {
    if (n > 0) g = substitute_once(g, planted);
    fit.distances.push_back(planted_distance(g));
    if (n > 0) {
      x.push_back(n);
      y.push_back(std::log(static_cast<double>(fit.distances.back())));
    }
  }
  fit.fitted_rate = std::exp(ols(x, y).slope);
  fit.lambda_D = lambda_distance(choice_family(planted), planted.initial_colour).value;
  fit.relative_error = std::abs(fit.fitted_rate - fit.lambda_D) / fit.lambda_D;
  return fit;
}

IgsSpec random_spec(const RandomSpecParams& params) {
  std::mt19937_64 rng(params.seed);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  auto coin = [&](double p) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p; };
  IgsSpec spec;
  spec.colours = uniform(params.min_colours, params.max_colours);
  spec.initial_colour = uniform(1, spec.colours);
  const int K = spec.colours;
  for (int c = 1; c <= K; ++c) {
    RuleGraph r;
    r.colour = c;
    auto colour = [&] { return coin(params.bias) ? uniform(c, K) : uniform(1, K); };
    auto add_edge = [&](int a, int b) {
      if (coin(0.5)) std::swap(a, b);
      r.graph.edges.push_back({a, b, colour()});
    };
    const int length = uniform(2, std::max(2, params.max_path_length));
    for (int v = 0; v <= length; ++v) r.graph.vertices.push_back("p" + std::to_string(v));
    r.beta_plus = 0;
    r.beta_minus = length;
    for (int v = 0; v < length; ++v) add_edge(v, v + 1);
    const int extra = uniform(0, params.max_extra_vertices);
    for (int k = 0; k < extra; ++k) {
      const int anchor = uniform(0, static_cast<int>(r.graph.vertices.size()) - 1);
      r.graph.vertices.push_back("x" + std::to_string(k));
      add_edge(anchor, static_cast<int>(r.graph.vertices.size()) - 1);
    }
    const int chords = uniform(0, params.max_extra_edges);
    const int nv = static_cast<int>(r.graph.vertices.size());
    for (int k = 0; k < chords; ++k) {
      const int a = uniform(0, nv - 1), b = uniform(0, nv - 1);
      if (a == b) continue;
      if ((a == r.beta_plus && b == r.beta_minus) || (a == r.beta_minus && b == r.beta_plus)) continue;
      add_edge(a, b);
    }
    spec.rules.push_back(std::move(r));
  }
  return spec;
}

void write_levels_csv(const std::vector<Level>& levels, std::ostream& out) {
  out << "branch,neg_log_l,log_count\n";
  for (const Level& l : levels)
    out << branch_name(l.label == kUnlabelled ? kUnclassified : l.label) << ',' << fmt(l.neg_log_ell()) << ','
        << fmt(log(l.count)) << '\n';
}

void write_regressions_csv(const std::vector<RegressionResult>& fits, std::ostream& out) {
  out << "branch,slope,intercept,r2,points,status\n";
  for (const RegressionResult& r : fits)
    out << r.branch << ',' << fmt(r.slope) << ',' << fmt(r.intercept) << ',' << fmt(r.r2) << ',' << r.points << ','
        << (r.sparse ? "sparse" : "ok") << '\n';
}

void write_plot_svg(const std::vector<Level>& levels, const std::vector<RegressionResult>& fits,
                    const std::string& title, std::ostream& out) {
  constexpr double W = 640, H = 480, L = 70, R = 30, T = 40, B = 60;
  double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  bool first = true;
  for (const Level& l : levels) {
    const double x = l.neg_log_ell(), y = log(l.count);
    if (first) {
      x0 = x1 = x;
      y0 = y1 = y;
      first = false;
    }
    x0 = std::min(x0, x), x1 = std::max(x1, x), y0 = std::min(y0, y), y1 = std::max(y1, y);
  }
  if (x1 - x0 < 1e-9) x1 = x0 + 1;
  if (y1 - y0 < 1e-9) y1 = y0 + 1;
  auto px = [&](double x) { return L + (x - x0) / (x1 - x0) * (W - L - R); };
  auto py = [&](double y) { return H - B - (y - y0) / (y1 - y0) * (H - T - B); };
  static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#8c564b", "#17becf"};
  auto colour_of = [&](const std::string& branch) -> std::string {
    if (branch == "suppressed") return "#999999";
    if (branch == "unclassified") return "#bcbd22";
    const int k = std::stoi(branch.substr(6)) - 1;
    return palette[k % 6];
  };
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\" viewBox=\"0 0 " << W
      << ' ' << H << "\">\n";
  out << "<!-- data: branch neg_log_l log_count -->\n";
  for (const Level& l : levels)
    out << "<!-- " << branch_name(l.label == kUnlabelled ? kUnclassified : l.label) << ' ' << fmt(l.neg_log_ell())
        << ' ' << fmt(log(l.count)) << " -->\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"15\">"
      << title << "</text>\n";
  out << "<line x1=\"" << L << "\" y1=\"" << H - B << "\" x2=\"" << W - R << "\" y2=\"" << H - B
      << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << L << "\" y1=\"" << T << "\" x2=\"" << L << "\" y2=\"" << H - B << "\" stroke=\"black\"/>\n";
  out << "<text x=\"" << W / 2 << "\" y=\"" << H - 20
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">-log(degree / max degree)</text>\n";
  out << "<text x=\"18\" y=\"" << H / 2 << "\" transform=\"rotate(-90 18 " << H / 2
      << ")\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">log(vertex count)</text>\n";
  for (int t = 0; t <= 4; ++t) {
    const double xv = x0 + (x1 - x0) * t / 4, yv = y0 + (y1 - y0) * t / 4;
    out << "<text x=\"" << fmt(px(xv), "%.2f") << "\" y=\"" << H - B + 16
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"10\">" << fmt(xv, "%.2f") << "</text>\n";
    out << "<text x=\"" << L - 6 << "\" y=\"" << fmt(py(yv) + 3, "%.2f")
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">" << fmt(yv, "%.2f") << "</text>\n";
  }
  for (const Level& l : levels) {
    const std::string branch = branch_name(l.label == kUnlabelled ? kUnclassified : l.label);
    out << "<circle cx=\"" << fmt(px(l.neg_log_ell()), "%.2f") << "\" cy=\"" << fmt(py(log(l.count)), "%.2f")
        << "\" r=\"3\" fill=\"" << colour_of(branch) << "\"/>\n";
  }
  int row = 0;
  for (const RegressionResult& r : fits) {
    const std::string c = colour_of(r.branch);
    if (!r.sparse) {
      out << "<line x1=\"" << fmt(px(x0), "%.2f") << "\" y1=\"" << fmt(py(r.slope * x0 + r.intercept), "%.2f")
          << "\" x2=\"" << fmt(px(x1), "%.2f") << "\" y2=\"" << fmt(py(r.slope * x1 + r.intercept), "%.2f")
          << "\" stroke=\"" << c << "\" stroke-dasharray=\"4 3\"/>\n";
    }
    out << "<text x=\"" << L + 10 << "\" y=\"" << T + 14 + 16 * row++ << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\""
        << c << "\">" << r.branch << ": "
        << (r.sparse ? std::string("sparse") : "slope " + fmt(r.slope, "%.4f") + " (log P vs -log l)") << "</text>\n";
  }
  out << "</svg>\n";
}

}  // namespace eigs
