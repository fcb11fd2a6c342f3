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
#include <string>
#include <vector>

#include "eigs/model.hpp"
#include "eigs/spectral.hpp"

namespace eigs {

struct DistanceOptions {
  std::int64_t combination_budget = 200'000;
  std::int64_t oracle_budget = 5'000'000;
  int bellman_cap = 500;
  double tolerance = kRhoTolerance;
};

/// Colours reachable from j in the union digraph of all choice rows (R_j), 1-based.
std::vector<int> trim_set(const ChoiceFamily& family, int j);

struct BellmanState {
  int colour = 1;
  std::vector<int> trim;  // R_j, 1-based ascending
  std::vector<BigRow> iterates;  // y_0..y_n over R_j
  std::vector<double> ratios;    // y_{n+1}[j] / y_n[j]
  double lambda_hat = 0.0;
  double root_estimate = 0.0;  // y_n[j]^(1/n)
  bool converged = false;
  std::string stop_reason;  // "ratio" or "cap"
  std::optional<double> limit_constant;  // y_n[j] / lambda^n when it settles
};

/// One Bellman step: y'[a] = min_{d in V_a} sum_b d[b] y[b] over trim.
BigRow bellman_step(const ChoiceFamily& family, const std::vector<int>& trim, const BigRow& y);
BellmanState bellman_iterate(const ChoiceFamily& family, int j, const DistanceOptions& opt = {});

/// Exact min over all n-fold products of ||xi_j D_1..D_n||_1.
BigInt brute_force_min_product(const ChoiceFamily& family, int j, int n, std::int64_t budget = 5'000'000);

/// Row choice per trim colour (index into V_a).
using Choice = std::vector<int>;

struct MinMaxResult {
  double lambda = 0.0;
  std::vector<int> trim;
  std::vector<Choice> minimizers;  // lexicographic order
  std::int64_t combinations = 0;
};

/// min over D of the largest block radius reachable from j in D.
std::optional<MinMaxResult> min_max_rate(const ChoiceFamily& family, int j, const DistanceOptions& opt = {});

/// D restricted to trim x trim for a given choice.
IntMatrix trimmed_matrix(const ChoiceFamily& family, const std::vector<int>& trim, const Choice& choice);
bool is_primitive(const IntMatrix& A);

struct StabilityReport {
  int colour = 1;
  bool stable = false;
  bool budget_exceeded = false;
  bool any_primitive_minimizer = false;
  std::vector<int> trim;
  std::optional<Choice> witness;  // lexicographically first certifying (or first) minimizer
  IntMatrix trimmed;
  std::string detail;
  std::optional<double> certificate_residual;  // ||F(v*) - lambda v*||_inf / ||v*||_inf
};

StabilityReport check_primitive_stability(const ChoiceFamily& family, int j, const DistanceOptions& opt = {});

/// F_j(v)[a] = min_{d in V_a} d . v over trim, in doubles.
Eigen::VectorXd bellman_operator(const ChoiceFamily& family, const std::vector<int>& trim, const Eigen::VectorXd& v);

struct LambdaEstimate {
  double value = 0.0;
  std::string source;  // "min-max" or "bellman"
  BellmanState bellman;
  bool consistent = true;
};

LambdaEstimate lambda_distance(const ChoiceFamily& family, int j, const DistanceOptions& opt = {});

struct DistanceLayer {
  int colour = 1;
  double lambda_D = 0.0;
  std::string lambda_source;
  bool bellman_converged = false;
  bool bellman_consistent = true;
  StabilityReport stability;
  std::vector<int> I_dist;  // 1-based
  IntMatrix M_dist;
  FrobeniusForm M_dist_form;
  double lambda_M_surv = 0.0;
  bool M_dist_primitive_frobenius = false;
  std::optional<double> dim_H;
  std::string error;
};

struct DistanceAnalysis {
  int initial_colour = 1;
  std::vector<int> colours;  // r_M(supp x0), 1-based
  std::vector<DistanceLayer> layers;  // one per entry of colours
  std::vector<double> spectrum;
  bool multifractal = false;
  bool bddm = false;
  bool flags_agree = true;
  std::vector<int> I_dist_initial;

  const DistanceLayer& layer(int colour) const;
};

DistanceAnalysis analyze_distance(const IgsSpec& spec, const DistanceOptions& opt = {});

double hausdorff_dimension(const IgsSpec& spec, int j, const DistanceOptions& opt = {});

struct FractalSpectrum {
  std::vector<double> values;
  bool multifractal = false;
  bool bddm = false;
};
FractalSpectrum fractal_spectrum(const IgsSpec& spec, const DistanceOptions& opt = {});

/// Sorted unique values at relative tolerance.
std::vector<double> dedupe(std::vector<double> values, double tol = kRhoTolerance);

}  // namespace eigs
