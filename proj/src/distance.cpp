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

#include "eigs/distance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>

namespace eigs {

namespace {

int position(const std::vector<int>& trim, int colour) {
  auto it = std::lower_bound(trim.begin(), trim.end(), colour);
  if (it == trim.end() || *it != colour) return -1;
  return static_cast<int>(it - trim.begin());
}

/// Advance an odometer (last digit fastest); false once it wraps.
bool advance(Choice& c, const std::vector<int>& radix) {
  for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k) {
    if (++c[k] < radix[k]) return true;
    c[k] = 0;
  }
  return false;
}

std::vector<int> radices(const ChoiceFamily& family, const std::vector<int>& trim) {
  std::vector<int> r;
  for (int a : trim) r.push_back(static_cast<int>(family.options(a).size()));
  return r;
}

std::int64_t combination_count(const std::vector<int>& radix, std::int64_t cap) {
  std::int64_t p = 1;
  for (int r : radix) {
    if (r == 0) return 0;
    if (p > cap / r) return cap + 1;
    p *= r;
  }
  return p;
}

double max_block_rho(const IntMatrix& A) {
  double best = 0.0;
  for (const auto& b : condensation(A).blocks) best = std::max(best, b.rho);
  return best;
}

}  // namespace

std::vector<int> trim_set(const ChoiceFamily& family, int j) {
  const int K = static_cast<int>(family.rows.size());
  std::vector<char> seen(K + 1, 0);
  std::vector<int> stack{j};
  seen[j] = 1;
  while (!stack.empty()) {
    const int a = stack.back();
    stack.pop_back();
    for (const ChiVector& d : family.options(a))
      for (int b = 1; b <= K; ++b)
        if (d(b - 1) > 0 && !seen[b]) {
          seen[b] = 1;
          stack.push_back(b);
        }
  }
  std::vector<int> out;
  for (int b = 1; b <= K; ++b)
    if (seen[b]) out.push_back(b);
  return out;
}

BigRow bellman_step(const ChoiceFamily& family, const std::vector<int>& trim, const BigRow& y) {
  BigRow next(trim.size());
  for (std::size_t k = 0; k < trim.size(); ++k) {
    bool first = true;
    for (const ChiVector& d : family.options(trim[k])) {
      BigInt s = 0;
      for (Eigen::Index b = 0; b < d.size(); ++b) {
        if (d(b) == 0) continue;
        const int p = position(trim, static_cast<int>(b) + 1);
        if (p < 0) throw std::logic_error("choice row leaves the trim set");
        s += BigInt(d(b)) * y(p);
      }
      if (first || s < next(k)) next(k) = s;
      first = false;
    }
    if (first) throw AnalysisError("colour " + std::to_string(trim[k]) + " has no planting path");
  }
  return next;
}

BellmanState bellman_iterate(const ChoiceFamily& family, int j, const DistanceOptions& opt) {
  BellmanState st;
  st.colour = j;
  st.trim = trim_set(family, j);
  const int pj = position(st.trim, j);
  st.iterates.push_back(BigRow::Constant(st.trim.size(), BigInt(1)));
  int stable_run = 0;
  st.stop_reason = "cap";
  for (int n = 0; n < opt.bellman_cap; ++n) {
    st.iterates.push_back(bellman_step(family, st.trim, st.iterates.back()));
    const BigInt& prev = st.iterates[n](pj);
    const BigInt& cur = st.iterates[n + 1](pj);
    if (prev.is_zero()) throw AnalysisError("planted distance vanished for colour " + std::to_string(j));
    st.ratios.push_back(ratio(cur, prev));
    if (st.ratios.size() >= 2) {
      const double a = st.ratios[st.ratios.size() - 1], b = st.ratios[st.ratios.size() - 2];
      stable_run = std::abs(a - b) <= opt.tolerance * std::abs(a) ? stable_run + 1 : 0;
      if (stable_run >= 10) {
        st.converged = true;
        st.stop_reason = "ratio";
        break;
      }
    }
  }
  st.lambda_hat = st.ratios.back();
  const int n = static_cast<int>(st.iterates.size()) - 1;
  st.root_estimate = std::exp(log(st.iterates.back()(pj)) / n);
  if (st.converged && st.lambda_hat > 1.0) {
    auto c = [&](int k) { return std::exp(log(st.iterates[k](pj)) - k * std::log(st.lambda_hat)); };
    const double a = c(n), b = c(n - 1);
    if (std::abs(a - b) <= 1e-6 * a) st.limit_constant = a;
  }
  return st;
}

BigInt brute_force_min_product(const ChoiceFamily& family, int j, int n, std::int64_t budget) {
  const int K = static_cast<int>(family.rows.size());
  const std::vector<int> trim = trim_set(family, j);
  const std::vector<int> radix = radices(family, trim);
  const std::int64_t combos = combination_count(radix, budget);
  if (combos > budget) throw BudgetError("choice family too large for brute force");
  std::set<std::vector<BigInt>> states;
  std::vector<BigInt> start(K, BigInt(0));
  start[j - 1] = 1;
  states.insert(start);
  std::int64_t work = 0;
  for (int step = 0; step < n; ++step) {
    std::set<std::vector<BigInt>> next;
    for (const auto& x : states) {
      Choice c(trim.size(), 0);
      do {
        if (++work > budget) throw BudgetError("brute-force product budget exceeded at step " + std::to_string(step));
        std::vector<BigInt> y(K, BigInt(0));
        for (std::size_t k = 0; k < trim.size(); ++k) {
          const BigInt& xa = x[trim[k] - 1];
          if (xa.is_zero()) continue;
          const ChiVector& d = family.options(trim[k])[c[k]];
          for (int b = 0; b < K; ++b)
            if (d(b)) y[b] += xa * BigInt(d(b));
        }
        next.insert(std::move(y));
      } while (advance(c, radix));
    }
    states = std::move(next);
  }
  BigInt best = -1;
  for (const auto& x : states) {
    BigInt s = 0;
    for (const BigInt& v : x) s += v;
    if (best < BigInt(0) || s < best) best = s;
  }
  return best;
}

IntMatrix trimmed_matrix(const ChoiceFamily& family, const std::vector<int>& trim, const Choice& choice) {
  IntMatrix A = IntMatrix::Zero(trim.size(), trim.size());
  for (std::size_t a = 0; a < trim.size(); ++a) {
    const ChiVector& d = family.options(trim[a])[choice[a]];
    for (std::size_t b = 0; b < trim.size(); ++b) A(a, b) = d(trim[b] - 1);
  }
  return A;
}

bool is_primitive(const IntMatrix& A) {
  const FrobeniusForm f = condensation(A);
  return f.size() == 1 && f.blocks[0].primitive;
}

std::optional<MinMaxResult> min_max_rate(const ChoiceFamily& family, int j, const DistanceOptions& opt) {
  MinMaxResult res;
  res.trim = trim_set(family, j);
  const std::vector<int> radix = radices(family, res.trim);
  res.combinations = combination_count(radix, opt.combination_budget);
  if (res.combinations > opt.combination_budget || res.combinations == 0) return std::nullopt;
  const int pj = position(res.trim, j);
  std::vector<std::pair<Choice, double>> values;
  Choice c(res.trim.size(), 0);
  double best = std::numeric_limits<double>::infinity();
  do {
    const double v = reachable_rho(condensation(trimmed_matrix(family, res.trim, c)), pj);
    values.push_back({c, v});
    best = std::min(best, v);
  } while (advance(c, radix));
  res.lambda = best;
  for (auto& [choice, v] : values)
    if (rho_equal(v, best, opt.tolerance)) res.minimizers.push_back(choice);
  return res;
}

Eigen::VectorXd bellman_operator(const ChoiceFamily& family, const std::vector<int>& trim, const Eigen::VectorXd& v) {
  Eigen::VectorXd out(trim.size());
  for (std::size_t a = 0; a < trim.size(); ++a) {
    double best = std::numeric_limits<double>::infinity();
    for (const ChiVector& d : family.options(trim[a])) {
      double s = 0.0;
      for (std::size_t b = 0; b < trim.size(); ++b) s += static_cast<double>(d(trim[b] - 1)) * v(b);
      best = std::min(best, s);
    }
    out(a) = best;
  }
  return out;
}

StabilityReport check_primitive_stability(const ChoiceFamily& family, int j, const DistanceOptions& opt) {
  StabilityReport rep;
  rep.colour = j;
  rep.trim = trim_set(family, j);
  const std::vector<int> radix = radices(family, rep.trim);
  const std::int64_t combos = combination_count(radix, opt.combination_budget);
  if (combos > opt.combination_budget) {
    rep.budget_exceeded = true;
    rep.detail = "row-choice combinations exceed budget";
    return rep;
  }
  const LambdaEstimate lam = lambda_distance(family, j, opt);
  // forward invariance of R_j holds by construction of trim_set; check every trim row stays inside
  Choice c(rep.trim.size(), 0);
  std::vector<Choice> minimizers;
  do {
    const IntMatrix A = trimmed_matrix(family, rep.trim, c);
    for (std::size_t k = 0; k < rep.trim.size(); ++k) {
      const ChiVector& d = family.options(rep.trim[k])[c[k]];
      if (d.sum() != A.row(k).sum()) throw AnalysisError("trim set is not forward invariant");
    }
    if (rho_equal(max_block_rho(A), lam.value, opt.tolerance)) minimizers.push_back(c);
  } while (advance(c, radix));
  if (minimizers.empty()) throw AnalysisError("no trimmed matrix attains the distance rate");
  for (const Choice& m : minimizers) {
    const IntMatrix A = trimmed_matrix(family, rep.trim, m);
    if (!is_primitive(A)) continue;
    rep.any_primitive_minimizer = true;
    bool robust = true;
    for (std::size_t k = 0; k < rep.trim.size() && robust; ++k) {
      for (int o = 0; o < radix[k] && robust; ++o) {
        if (o == m[k]) continue;
        Choice alt = m;
        alt[k] = o;
        robust = is_primitive(trimmed_matrix(family, rep.trim, alt));
      }
    }
    if (robust) {
      rep.stable = true;
      rep.witness = m;
      rep.trimmed = A;
      break;
    }
  }
  if (!rep.witness) {
    rep.witness = minimizers.front();
    rep.trimmed = trimmed_matrix(family, rep.trim, minimizers.front());
    rep.detail = rep.any_primitive_minimizer ? "a single-row replacement breaks primitivity"
                                             : "no minimizing trimmed matrix is primitive";
  }
  if (rep.stable) {
    const Eigen::VectorXd v = perron_vector(rep.trimmed);
    const Eigen::VectorXd Fv = bellman_operator(family, rep.trim, v);
    rep.certificate_residual = (Fv - lam.value * v).cwiseAbs().maxCoeff() / v.cwiseAbs().maxCoeff();
  }
  return rep;
}

LambdaEstimate lambda_distance(const ChoiceFamily& family, int j, const DistanceOptions& opt) {
  LambdaEstimate est;
  est.bellman = bellman_iterate(family, j, opt);
  if (auto mm = min_max_rate(family, j, opt)) {
    est.value = mm->lambda;
    est.source = "min-max";
    if (est.bellman.converged) est.consistent = rho_equal(est.bellman.lambda_hat, mm->lambda, 1e-6);
  } else {
    est.value = est.bellman.lambda_hat;
    est.source = "bellman";
  }
  return est;
}

std::vector<double> dedupe(std::vector<double> values, double tol) {
  std::sort(values.begin(), values.end());
  std::vector<double> out;
  for (double v : values)
    if (out.empty() || !rho_equal(out.back(), v, tol)) out.push_back(v);
  return out;
}

const DistanceLayer& DistanceAnalysis::layer(int colour) const {
  for (const auto& l : layers)
    if (l.colour == colour) return l;
  throw std::out_of_range("colour not analysed");
}

namespace {

std::vector<int> colours_reachable(const FrobeniusForm& form, const std::vector<int>& from) {
  std::set<int> out;
  for (int a : from)
    for (int i : reachability(form, a - 1).indices) out.insert(i + 1);
  return {out.begin(), out.end()};
}

}  // namespace

DistanceAnalysis analyze_distance(const IgsSpec& spec, const DistanceOptions& opt) {
  DistanceAnalysis out;
  out.initial_colour = spec.initial_colour;
  const IntMatrix M = mass_matrix(spec);
  const FrobeniusForm Mf = condensation(M);
  const ChoiceFamily family = choice_family(spec);
  std::vector<int> support{spec.initial_colour};
  const ChiVector x0 = chi(spec.initial(), spec.colours);
  for (int a = 1; a <= spec.colours; ++a)
    if (x0(a - 1) > 0) support.push_back(a);
  out.colours = colours_reachable(Mf, support);
  std::map<int, LambdaEstimate> lambdas;
  for (int a : out.colours) lambdas.emplace(a, lambda_distance(family, a, opt));
  for (int j : out.colours) {
    DistanceLayer L;
    L.colour = j;
    const LambdaEstimate& lam = lambdas.at(j);
    L.lambda_D = lam.value;
    L.lambda_source = lam.source;
    L.bellman_converged = lam.bellman.converged;
    L.bellman_consistent = lam.consistent;
    L.stability = check_primitive_stability(family, j, opt);
    for (int a : colours_reachable(Mf, {j}))
      if (rho_equal(lambdas.at(a).value, L.lambda_D, opt.tolerance)) L.I_dist.push_back(a);
    std::vector<int> idx;
    for (int a : L.I_dist) idx.push_back(a - 1);
    L.M_dist = principal(M, idx);
    L.M_dist_form = condensation(L.M_dist);
    L.M_dist_primitive_frobenius = L.M_dist_form.primitive_frobenius();
    const int pj = static_cast<int>(std::find(L.I_dist.begin(), L.I_dist.end(), j) - L.I_dist.begin());
    L.lambda_M_surv = reachable_rho(L.M_dist_form, pj);
    if (L.lambda_D <= 1.0 + opt.tolerance)
      L.error = "distance rate does not exceed 1";
    else
      L.dim_H = std::log(L.lambda_M_surv) / std::log(L.lambda_D);
    out.layers.push_back(std::move(L));
  }
  const DistanceLayer& root = out.layer(spec.initial_colour);
  out.I_dist_initial = root.I_dist;
  std::vector<double> dims, surv;
  for (int j : root.I_dist) {
    const DistanceLayer& l = out.layer(j);
    if (!l.dim_H) throw AnalysisError("dimension undefined for colour " + std::to_string(j) + ": " + l.error);
    dims.push_back(*l.dim_H);
    surv.push_back(l.lambda_M_surv);
  }
  out.spectrum = dedupe(dims, opt.tolerance);
  const std::size_t surv_count = dedupe(surv, opt.tolerance).size();
  out.multifractal = out.spectrum.size() > 1;
  out.bddm = surv_count > 1;
  out.flags_agree = out.multifractal == out.bddm;
  return out;
}

double hausdorff_dimension(const IgsSpec& spec, int j, const DistanceOptions& opt) {
  const DistanceLayer& l = analyze_distance(with_initial_colour(spec, j), opt).layer(j);
  if (!l.dim_H) throw AnalysisError(l.error);
  return *l.dim_H;
}

FractalSpectrum fractal_spectrum(const IgsSpec& spec, const DistanceOptions& opt) {
  const DistanceAnalysis a = analyze_distance(spec, opt);
  if (!a.flags_agree) throw AnalysisError("multifractal and divergent-mass flags disagree");
  return {a.spectrum, a.multifractal, a.bddm};
}

}  // namespace eigs
