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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eigs/engine.hpp"
#include "eigs/model.hpp"
#include "eigs/spectral.hpp"

namespace eigs {

struct DegreeOptions {
  double class_tolerance = 1e-6;
  double ambiguity_ceiling = 1e-3;
  int constant_cap = 400;
  double constant_step = 1e-9;
};

struct BirthType {
  KappaVector u;
  int mu = -1;  // first generation with B_u(m) > 0, -1 if never born
  IntRow b;     // interior vertices of this type per rule colour
  int initial_count = 0;
  std::vector<std::string> origins;  // e.g. "initial:v+", "R1:a"
  double lambda = 0.0;
  int tau = 1;
  GrowthDescriptor c_deg;
  bool dominant = false;
  bool surviving = false;
  std::optional<double> alpha;
  ChainGrowth birth_growth;  // growth of m -> B_u(m); meaningful when surviving
};

/// All birth types of the system: initial vertices plus interiors of reachable rules.
std::vector<BirthType> birth_types(const IgsSpec& spec);
/// Every distinct interior/initial kappa with counts, including unreachable rules.
std::vector<BirthType> all_vertex_types(const IgsSpec& spec);

struct Dominance {
  double lambda_U = 0.0;
  int tau_deg = 1;
  std::vector<BirthType> types;  // lambda, tau, dominant filled in
};

Dominance dominance(const IgsSpec& spec);

/// B_u(m) = x0 M^{m-1} b_u^T for m >= 1, initial multiplicity at m = 0.
BigInt birth_count(const IgsSpec& spec, const BirthType& type, int m);

std::vector<BirthType> surviving_types(const IgsSpec& spec);

GrowthDescriptor c_deg_constant(const IgsSpec& spec, const KappaVector& u, const DegreeOptions& opt = {});

struct DegreeClass {
  std::vector<int> members;  // indices into DegreeAnalysis::types
  std::vector<int> shifts;   // s_K(u) per member
  double alpha = 0.0;
  double eff_rate = 0.0;
  int q = 1;
  double numeric_rate = 0.0;  // ratio estimate of the class count growth
};

struct DegreeAnalysis {
  double lambda_U = 0.0;
  int tau_deg = 1;
  double C_deg = 0.0;
  std::vector<BirthType> types;
  std::vector<DegreeClass> classes;
  bool applicable = false;
  std::string reason;
  bool bedm = false;
  bool scale_free = false;
  std::optional<double> dimension;
  std::vector<double> spectrum;
  bool multiscale_free = false;

  /// Class index of a type, -1 if not in a class.
  int class_of(int type) const;
};

DegreeAnalysis analyze_degree(const IgsSpec& spec, const DegreeOptions& opt = {});

std::vector<DegreeClass> degree_classes(const IgsSpec& spec, const DegreeOptions& opt = {});
std::optional<double> degree_dimension(const IgsSpec& spec, const DegreeOptions& opt = {});

struct DegreeSpectrum {
  std::vector<double> values;
  bool bedm = false;
  bool multiscale_free = false;
};
DegreeSpectrum degree_spectrum(const IgsSpec& spec, const DegreeOptions& opt = {});

Histogram combinatorial_histogram(const IgsSpec& spec, int n);

/// Histogram whose counts are split by a provenance label per vertex type.
using LabelledHistogram = std::map<BigInt, std::map<int, BigInt>>;

/// Branch label of each type in analysis.types (class index, or -1 suppressed).
std::vector<int> branch_labels(const DegreeAnalysis& analysis, const DegreeOptions& opt = {});

/// Counts per exact degree split by branch label.
LabelledHistogram labelled_histogram(const IgsSpec& spec, const DegreeAnalysis& analysis, int n,
                                     const DegreeOptions& opt = {});

}  // namespace eigs
