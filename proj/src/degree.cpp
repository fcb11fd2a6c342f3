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

#include "eigs/degree.hpp"
#include "eigs/distance.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace eigs {

namespace {

using Key = std::vector<std::int64_t>;

Key key_of(const KappaVector& u) { return Key(u.data(), u.data() + u.size()); }

std::vector<int> support_of(const IntRow& x) {
  std::vector<int> s;
  for (Eigen::Index i = 0; i < x.size(); ++i)
    if (x(i) > 0) s.push_back(static_cast<int>(i));
  return s;
}

int first_birth(const IntMatrix& M, const IntRow& x0, const BirthType& t) {
  if (t.initial_count > 0) return 0;
  const Eigen::Index K = M.rows();
  std::vector<char> live(K);
  for (Eigen::Index a = 0; a < K; ++a) live[a] = x0(a) > 0;
  for (int m = 1; m <= K; ++m) {
    for (Eigen::Index c = 0; c < K; ++c)
      if (live[c] && t.b(c) > 0) return m;
    std::vector<char> next(K, 0);
    for (Eigen::Index a = 0; a < K; ++a)
      if (live[a])
        for (Eigen::Index c = 0; c < K; ++c)
          if (M(a, c) > 0) next[c] = 1;
    live = std::move(next);
  }
  return -1;
}

double integrality_defect(double x) { return std::abs(x - std::round(x)); }

}  // namespace

std::vector<BirthType> all_vertex_types(const IgsSpec& spec) {
  const int K = spec.colours;
  std::map<Key, BirthType> table;
  auto slot = [&](const KappaVector& u) -> BirthType& {
    auto [it, fresh] = table.try_emplace(key_of(u));
    if (fresh) {
      it->second.u = u;
      it->second.b = IntRow::Zero(K);
    }
    return it->second;
  };
  const ColouredGraph xi0 = spec.initial();
  for (int v = 0; v < static_cast<int>(xi0.vertices.size()); ++v) {
    BirthType& t = slot(kappa(xi0, v, K));
    t.initial_count += 1;
    t.origins.push_back("initial:" + xi0.vertices[v]);
  }
  for (int c = 1; c <= K; ++c) {
    const RuleGraph& r = spec.rule(c);
    for (int v = 0; v < static_cast<int>(r.graph.vertices.size()); ++v) {
      if (v == r.beta_plus || v == r.beta_minus) continue;
      BirthType& t = slot(kappa(r.graph, v, K));
      t.b(c - 1) += 1;
      t.origins.push_back("R" + std::to_string(c) + ":" + r.graph.vertices[v]);
    }
  }
  const IntMatrix M = mass_matrix(spec);
  const IntRow x0 = chi(xi0, K);
  std::vector<BirthType> out;
  for (auto& [k, t] : table) {
    t.mu = first_birth(M, x0, t);
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<BirthType> birth_types(const IgsSpec& spec) {
  const IntMatrix M = mass_matrix(spec);
  const FrobeniusForm Mf = condensation(M);
  const IntRow x0 = chi(spec.initial(), spec.colours);
  std::set<int> reach;
  for (int a : support_of(x0))
    for (int i : reachability(Mf, a).indices) reach.insert(i);
  std::vector<BirthType> out;
  for (BirthType& t : all_vertex_types(spec)) {
    if (t.u.sum() == 0) continue;
    bool hosted = t.initial_count > 0;
    for (int c : reach) hosted = hosted || t.b(c) > 0;
    if (hosted) out.push_back(std::move(t));
  }
  return out;
}

Dominance dominance(const IgsSpec& spec) {
  Dominance d;
  const FrobeniusForm Nf = condensation(degree_matrix(spec));
  d.types = birth_types(spec);
  for (BirthType& t : d.types) {
    const std::vector<int> supp = support_of(t.u);
    t.lambda = 0.0;
    for (int a : supp) t.lambda = std::max(t.lambda, reachable_rho(Nf, a));
    t.tau = 1;
    for (int a : supp)
      if (rho_equal(reachable_rho(Nf, a), t.lambda)) t.tau = std::max(t.tau, kappa_chain(Nf, a));
    d.lambda_U = std::max(d.lambda_U, t.lambda);
  }
  for (const BirthType& t : d.types)
    if (rho_equal(t.lambda, d.lambda_U)) d.tau_deg = std::max(d.tau_deg, t.tau);
  for (BirthType& t : d.types) t.dominant = rho_equal(t.lambda, d.lambda_U) && t.tau == d.tau_deg;
  return d;
}

BigInt birth_count(const IgsSpec& spec, const BirthType& type, int m) {
  if (m < 0) throw std::invalid_argument("negative generation");
  if (m == 0) return BigInt(type.initial_count);
  const BigRow x = power_row(chi(spec.initial(), spec.colours), mass_matrix(spec), m - 1);
  BigInt s = 0;
  for (Eigen::Index c = 0; c < x.size(); ++c)
    if (type.b(c)) s += x(c) * BigInt(type.b(c));
  return s;
}

std::vector<BirthType> surviving_types(const IgsSpec& spec) {
  std::vector<BirthType> out;
  for (const BirthType& t : analyze_degree(spec).types)
    if (t.surviving) out.push_back(t);
  return out;
}

GrowthDescriptor c_deg_constant(const IgsSpec& spec, const KappaVector& u, const DegreeOptions& opt) {
  return growth_descriptor(degree_matrix(spec), u, opt.constant_cap, opt.constant_step);
}

int DegreeAnalysis::class_of(int type) const {
  for (std::size_t k = 0; k < classes.size(); ++k)
    if (std::find(classes[k].members.begin(), classes[k].members.end(), type) != classes[k].members.end())
      return static_cast<int>(k);
  return -1;
}

DegreeAnalysis analyze_degree(const IgsSpec& spec, const DegreeOptions& opt) {
  DegreeAnalysis out;
  Dominance dom = dominance(spec);
  out.lambda_U = dom.lambda_U;
  out.tau_deg = dom.tau_deg;
  out.types = std::move(dom.types);
  if (out.lambda_U <= 1.0 + kRhoTolerance) {
    out.reason = "degree growth rate does not exceed 1";
    return out;
  }
  const IntMatrix M = mass_matrix(spec);
  const IntMatrix N = degree_matrix(spec);
  const FrobeniusForm Mf = condensation(M);
  const FrobeniusForm Nf = condensation(N);
  const IntRow x0 = chi(spec.initial(), spec.colours);
  const std::vector<int> sources = support_of(x0);
  const double logL = std::log(out.lambda_U);

  for (BirthType& t : out.types) {
    if (!t.dominant) continue;
    t.c_deg = growth_descriptor(N, Nf, t.u, opt.constant_cap, opt.constant_step);
    if (t.mu >= 0) out.C_deg = std::max(out.C_deg, t.c_deg.constant * std::exp(-t.mu * logL));
    t.birth_growth = chain_growth(Mf, sources, support_of(t.b));
    t.surviving = !t.birth_growth.bounded;
  }
  for (BirthType& t : out.types)
    if (t.dominant) t.alpha = t.c_deg.constant / out.C_deg;

  for (int i = 0; i < static_cast<int>(out.types.size()); ++i) {
    const BirthType& t = out.types[i];
    if (!t.surviving) continue;
    bool placed = false;
    for (DegreeClass& K : out.classes) {
      const double x = std::log(*t.alpha / K.alpha) / logL;
      const double defect = integrality_defect(x);
      if (defect < opt.class_tolerance) {
        K.members.push_back(i);
        K.shifts.push_back(static_cast<int>(std::lround(x)));
        placed = true;
        break;
      }
      if (defect < opt.ambiguity_ceiling)
        throw AnalysisError("ambiguous degree class membership (defect " + std::to_string(defect) +
                            "); review the class tolerance");
    }
    if (!placed) {
      DegreeClass K;
      K.members = {i};
      K.shifts = {0};
      K.alpha = *t.alpha;
      out.classes.push_back(std::move(K));
    }
  }
  if (out.classes.empty()) {
    out.reason = "no surviving dominant birth type";
    return out;
  }
  out.applicable = true;
  for (DegreeClass& K : out.classes) {
    for (int i : K.members) K.eff_rate = std::max(K.eff_rate, out.types[i].birth_growth.rate);
    for (int i : K.members)
      if (rho_equal(out.types[i].birth_growth.rate, K.eff_rate))
        K.q = std::max(K.q, out.types[i].birth_growth.poly_exponent + 1);
    // numeric cross-check on the exact class counts
    const int lo = 60, hi = 120;
    auto P = [&](int m) {
      BigInt s = 0;
      for (std::size_t k = 0; k < K.members.size(); ++k)
        if (m + K.shifts[k] >= 1) s += birth_count(spec, out.types[K.members[k]], m + K.shifts[k]);
      return s;
    };
    const BigInt a = P(lo), b = P(hi);
    if (!a.is_zero() && !b.is_zero())
      K.numeric_rate = std::exp((log(b) - log(a) - (K.q - 1) * std::log(double(hi) / lo)) / (hi - lo));
  }
  double top = 0.0;
  std::vector<double> dims, rates;
  for (const DegreeClass& K : out.classes) {
    top = std::max(top, K.eff_rate);
    rates.push_back(K.eff_rate);
    dims.push_back(std::log(K.eff_rate) / logL);
  }
  out.bedm = dedupe(rates).size() > 1;
  out.scale_free = !out.bedm && top > 1.0 + kRhoTolerance;
  if (out.scale_free) out.dimension = std::log(top) / logL;
  out.spectrum = dedupe(dims);
  out.multiscale_free = out.spectrum.size() > 1;
  if (out.bedm != out.multiscale_free) throw AnalysisError("BEDM and multiscale-free flags disagree");
  return out;
}

std::vector<DegreeClass> degree_classes(const IgsSpec& spec, const DegreeOptions& opt) {
  const DegreeAnalysis a = analyze_degree(spec, opt);
  if (!a.applicable) throw NotApplicable(a.reason);
  return a.classes;
}

std::optional<double> degree_dimension(const IgsSpec& spec, const DegreeOptions& opt) {
  const DegreeAnalysis a = analyze_degree(spec, opt);
  if (!a.applicable) throw NotApplicable(a.reason);
  return a.dimension;
}

DegreeSpectrum degree_spectrum(const IgsSpec& spec, const DegreeOptions& opt) {
  const DegreeAnalysis a = analyze_degree(spec, opt);
  if (!a.applicable) throw NotApplicable(a.reason);
  return {a.spectrum, a.bedm, a.multiscale_free};
}

std::vector<int> branch_labels(const DegreeAnalysis& analysis, const DegreeOptions& opt) {
  std::vector<int> labels(analysis.types.size(), -1);
  if (!analysis.applicable) return labels;
  const double logL = std::log(analysis.lambda_U);
  for (std::size_t i = 0; i < analysis.types.size(); ++i) {
    labels[i] = analysis.class_of(static_cast<int>(i));
    const BirthType& t = analysis.types[i];
    if (labels[i] >= 0 || !t.dominant || !t.alpha) continue;
    for (std::size_t k = 0; k < analysis.classes.size(); ++k)
      if (integrality_defect(std::log(*t.alpha / analysis.classes[k].alpha) / logL) < opt.class_tolerance) {
        labels[i] = static_cast<int>(k);
        break;
      }
  }
  return labels;
}

LabelledHistogram labelled_histogram(const IgsSpec& spec, const DegreeAnalysis& analysis, int n,
                                     const DegreeOptions& opt) {
  if (n < 0) throw std::invalid_argument("generation must be non-negative");
  const std::vector<int> labels = branch_labels(analysis, opt);
  std::map<Key, int> label_of;
  for (std::size_t i = 0; i < analysis.types.size(); ++i) label_of[key_of(analysis.types[i].u)] = labels[i];
  const IntMatrix M = mass_matrix(spec);
  const IntMatrix N = degree_matrix(spec);
  std::vector<BigRow> x;  // x[m] = x0 M^{m-1}
  x.push_back(BigRow());
  if (n >= 1) x.push_back(chi(spec.initial(), spec.colours).cast<BigInt>());
  const BigMatrix Mb = to_big(M);
  for (int m = 2; m <= n; ++m) x.push_back((x.back() * Mb).eval());
  LabelledHistogram hist;
  for (const BirthType& t : all_vertex_types(spec)) {
    auto it = label_of.find(key_of(t.u));
    const int label = it == label_of.end() ? -1 : it->second;
    const std::vector<BigInt> deg = power_norms(t.u, N, n);
    if (t.initial_count > 0) hist[deg[n]][label] += BigInt(t.initial_count);
    if (t.b.sum() == 0) continue;
    for (int m = 1; m <= n; ++m) {
      BigInt count = 0;
      for (Eigen::Index c = 0; c < t.b.size(); ++c)
        if (t.b(c)) count += x[m](c) * BigInt(t.b(c));
      if (!count.is_zero()) hist[deg[n - m]][label] += count;
    }
  }
  return hist;
}

Histogram combinatorial_histogram(const IgsSpec& spec, int n) {
  DegreeAnalysis bare;  // labels are irrelevant here
  LabelledHistogram lh = labelled_histogram(spec, bare, n);
  Histogram h;
  for (const auto& [d, parts] : lh) {
    BigInt total = 0;
    for (const auto& [label, c] : parts) total += c;
    h.emplace(d, total);
  }
  return h;
}

}  // namespace eigs
