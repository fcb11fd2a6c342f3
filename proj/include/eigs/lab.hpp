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

#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "eigs/degree.hpp"
#include "eigs/engine.hpp"
#include "eigs/model.hpp"

namespace eigs {

inline constexpr int kUnlabelled = -2;
inline constexpr int kSuppressed = -1;
inline constexpr int kUnclassified = -3;

/// One exact scaled-degree level l = degree / delta.
struct Level {
  BigInt degree;
  BigInt delta;
  BigInt count;
  int label = kUnlabelled;  // class index, kSuppressed, or kUnlabelled

  double ell() const { return ratio(degree, delta); }
  double neg_log_ell() const { return log(delta) - log(degree); }
};

/// Levels sorted by descending l; degree-0 vertices are dropped.
std::vector<Level> scaled_levels(const Histogram& hist);
std::vector<Level> scaled_levels(const LabelledHistogram& hist);
std::vector<Level> scaled_levels(const IgsSpec& spec, int n);

struct RegressionResult {
  std::string branch;  // "class-<k>", "suppressed", "unclassified"
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
  int points = 0;
  bool sparse = false;
};

/// OLS fit y = slope * x + intercept.
RegressionResult ols(const std::vector<double>& x, const std::vector<double>& y);

/// Per-branch OLS of log count against -log l.
std::vector<RegressionResult> branch_regression(const std::vector<Level>& levels, const std::vector<double>& alphas,
                                                double lambda_U, double lattice_tolerance = 0.10);

struct Simulation {
  int generation = 0;
  DegreeAnalysis analysis;
  std::vector<Level> levels;
  std::vector<RegressionResult> regressions;
};

/// Labelled combinatorial levels at generation n plus branch fits; never builds the graph.
Simulation simulate(const IgsSpec& spec, int n);

struct DistanceFit {
  std::vector<int> distances;  // planted distances for n = 0..n_max
  double fitted_rate = 0.0;
  double lambda_D = 0.0;
  double relative_error = 0.0;
};

DistanceFit distance_growth_fit(const IgsSpec& spec, int n_max, std::int64_t budget_edges = kDefaultEdgeBudget);

struct RandomSpecParams {
  std::uint64_t seed = 1;
  int min_colours = 1;
  int max_colours = 3;
  int max_path_length = 3;
  int max_extra_vertices = 2;
  int max_extra_edges = 2;
  double bias = 0.5;  // probability an edge colour is drawn from colours >= the rule's own
};

IgsSpec random_spec(const RandomSpecParams& params);

void write_levels_csv(const std::vector<Level>& levels, std::ostream& out);
void write_regressions_csv(const std::vector<RegressionResult>& fits, std::ostream& out);
void write_plot_svg(const std::vector<Level>& levels, const std::vector<RegressionResult>& fits,
                    const std::string& title, std::ostream& out);

std::string branch_name(int label);

}  // namespace eigs
