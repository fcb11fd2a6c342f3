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

#include "eigs/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <numeric>
#include <queue>
#include <set>

namespace eigs {

bool rho_equal(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({std::abs(a), std::abs(b), 1.0});
}

IntMatrix mass_matrix(const IgsSpec& spec) {
  IntMatrix M(spec.colours, spec.colours);
  for (int i = 1; i <= spec.colours; ++i) M.row(i - 1) = chi(spec.rule(i).graph, spec.colours);
  return M;
}

IntMatrix degree_matrix(const IgsSpec& spec) {
  const int K = spec.colours;
  IntMatrix N(2 * K, 2 * K);
  for (int i = 1; i <= K; ++i) {
    const RuleGraph& r = spec.rule(i);
    N.row(2 * (i - 1)) = kappa(r.graph, r.beta_plus, K);
    N.row(2 * (i - 1) + 1) = kappa(r.graph, r.beta_minus, K);
  }
  return N;
}

std::string ChoiceFamily::product_cardinality() const {
  BigInt p = 1;
  for (const auto& r : rows) p *= BigInt(static_cast<std::int64_t>(r.size()));
  return p.str();
}

ChoiceFamily choice_family(const IgsSpec& spec, std::int64_t path_budget) {
  ChoiceFamily family;
  const int K = spec.colours;
  for (int i = 1; i <= K; ++i) {
    const RuleGraph& rule = spec.rule(i);
    const ColouredGraph& g = rule.graph;
    const int n = static_cast<int>(g.vertices.size());
    std::vector<std::vector<std::pair<int, int>>> adj(n);
    for (const GraphEdge& e : g.edges) {
      adj[e.tail].push_back({e.head, e.colour});
      if (e.head != e.tail) adj[e.head].push_back({e.tail, e.colour});
    }
    std::set<std::vector<std::int64_t>> found;
    std::vector<std::int64_t> counts(K, 0);
    std::vector<char> on_path(n, 0);
    std::int64_t steps = 0;
    std::function<void(int)> dfs = [&](int v) {
      if (++steps > path_budget)
        throw BudgetError("path budget exceeded enumerating simple paths of rule " + std::to_string(i));
      if (v == rule.beta_minus) {
        found.insert(counts);
        return;
      }
      on_path[v] = 1;
      for (auto [w, c] : adj[v]) {
        if (on_path[w]) continue;
        counts[c - 1] += 1;
        dfs(w);
        counts[c - 1] -= 1;
      }
      on_path[v] = 0;
    };
    dfs(rule.beta_plus);
    std::vector<ChiVector> row;
    for (const auto& f : found) row.push_back(Eigen::Map<const IntRow>(f.data(), K));
    family.rows.push_back(std::move(row));
  }
  return family;
}

bool FrobeniusForm::primitive_frobenius() const {
  return std::all_of(blocks.begin(), blocks.end(), [](const FrobeniusBlock& b) { return !b.irreducible || b.primitive; });
}

std::vector<int> FrobeniusForm::reachable_blocks(int b) const {
  std::vector<char> seen(blocks.size(), 0);
  std::vector<int> stack{b};
  seen[b] = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (int s : successors[x])
      if (!seen[s]) {
        seen[s] = 1;
        stack.push_back(s);
      }
  }
  std::vector<int> out;
  for (int k = 0; k < size(); ++k)
    if (seen[k]) out.push_back(k);
  return out;
}

std::vector<int> FrobeniusForm::permutation() const {
  std::vector<int> p;
  for (const auto& b : blocks) p.insert(p.end(), b.indices.begin(), b.indices.end());
  return p;
}

namespace {

std::vector<std::vector<int>> tarjan(const IntMatrix& X) {
  const int n = static_cast<int>(X.rows());
  std::vector<int> index(n, -1), low(n, 0), stack;
  std::vector<char> on_stack(n, 0);
  std::vector<std::vector<int>> comps;
  int counter = 0;
  // explicit call stack: (vertex, next neighbour)
  std::vector<std::pair<int, int>> frames;
  for (int root = 0; root < n; ++root) {
    if (index[root] >= 0) continue;
    frames.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!frames.empty()) {
      auto& [v, next] = frames.back();
      if (next < n) {
        const int w = next++;
        if (X(v, w) <= 0) continue;
        if (index[w] < 0) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::vector<int> comp;
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
      }
      const int done = v;
      frames.pop_back();
      if (!frames.empty()) low[frames.back().first] = std::min(low[frames.back().first], low[done]);
    }
  }
  return comps;
}

int block_period(const IntMatrix& X, const std::vector<int>& idx) {
  std::vector<int> level(X.rows(), -1);
  std::deque<int> queue{idx.front()};
  level[idx.front()] = 0;
  std::vector<char> member(X.rows(), 0);
  for (int i : idx) member[i] = 1;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int w : idx)
      if (X(v, w) > 0 && level[w] < 0) {
        level[w] = level[v] + 1;
        queue.push_back(w);
      }
  }
  int g = 0;
  for (int v : idx)
    for (int w : idx)
      if (X(v, w) > 0) g = std::gcd(g, std::abs(level[v] + 1 - level[w]));
  return g;
}

struct PowerResult {
  double rho;
  Eigen::VectorXd vec;
};

PowerResult power_iterate(const Matrix<double>& B) {
  const Eigen::Index n = B.rows();
  if (n == 1) return {B(0, 0), Eigen::VectorXd::Ones(1)};
  using LMat = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
  using LVec = Eigen::Matrix<long double, Eigen::Dynamic, 1>;
  LMat A = B.cast<long double>() + LMat::Identity(n, n);
  LVec x = LVec::Ones(n);
  long double lo = 0, hi = 0;
  constexpr int kCap = 200000;
  for (int it = 0; it < kCap; ++it) {
    LVec y = A * x;
    lo = hi = y(0) / x(0);
    for (Eigen::Index i = 1; i < n; ++i) {
      lo = std::min(lo, y(i) / x(i));
      hi = std::max(hi, y(i) / x(i));
    }
    x = y / y.maxCoeff();
    if (hi - lo <= 1e-14L * hi) break;
  }
  const long double rho = (lo + hi) / 2 - 1;
  if (hi - lo > 1e-12L * std::max(rho, 1.0L))
    throw AnalysisError("power iteration did not converge, residual " + std::to_string(static_cast<double>(hi - lo)));
  return {static_cast<double>(rho), x.cast<double>()};
}

}  // namespace

double spectral_radius_impl(const Matrix<double>& block) { return power_iterate(block).rho; }

Eigen::VectorXd perron_vector_impl(const Matrix<double>& block) { return power_iterate(block).vec; }

FrobeniusForm condensation(const IntMatrix& X) {
  const int n = static_cast<int>(X.rows());
  std::vector<std::vector<int>> comps = tarjan(X);
  const int k = static_cast<int>(comps.size());
  std::vector<int> comp_of(n);
  for (int c = 0; c < k; ++c)
    for (int i : comps[c]) comp_of[i] = c;
  std::vector<std::set<int>> succ(k);
  std::vector<int> indegree(k, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (X(a, b) > 0 && comp_of[a] != comp_of[b] && succ[comp_of[a]].insert(comp_of[b]).second)
        ++indegree[comp_of[b]];
  // Kahn, ties broken by smallest member index
  auto key = [&](int c) { return comps[c].front(); };
  auto cmp = [&](int a, int b) { return key(a) > key(b); };
  std::priority_queue<int, std::vector<int>, decltype(cmp)> ready(cmp);
  for (int c = 0; c < k; ++c)
    if (indegree[c] == 0) ready.push(c);
  std::vector<int> order, position(k);
  while (!ready.empty()) {
    const int c = ready.top();
    ready.pop();
    position[c] = static_cast<int>(order.size());
    order.push_back(c);
    for (int s : succ[c])
      if (--indegree[s] == 0) ready.push(s);
  }
  FrobeniusForm form;
  form.block_of.resize(n);
  form.successors.resize(k);
  for (int c : order) {
    FrobeniusBlock blk;
    blk.indices = comps[c];
    const int i0 = blk.indices.front();
    if (blk.indices.size() == 1 && X(i0, i0) <= 0) {
      blk.rho = 0.0;
    } else {
      blk.irreducible = true;
      blk.period = block_period(X, blk.indices);
      blk.primitive = blk.period == 1;
      blk.rho = spectral_radius(principal(X, blk.indices));
    }
    for (int i : blk.indices) form.block_of[i] = position[c];
    for (int s : succ[c]) form.successors[position[c]].push_back(position[s]);
    std::sort(form.successors[position[c]].begin(), form.successors[position[c]].end());
    form.blocks.push_back(std::move(blk));
  }
  for (int b = 0; b < k; ++b)
    for (int s : form.successors[b]) form.dag_edges.push_back({b, s});
  return form;
}

Reach reachability(const FrobeniusForm& form, int i) {
  Reach r;
  r.blocks = form.reachable_blocks(form.block_of.at(i));
  for (int b : r.blocks) r.indices.insert(r.indices.end(), form.blocks[b].indices.begin(), form.blocks[b].indices.end());
  std::sort(r.indices.begin(), r.indices.end());
  return r;
}

Reach reachability(const IntMatrix& X, int i) { return reachability(condensation(X), i); }

double reachable_rho(const FrobeniusForm& form, int i) {
  double best = 0.0;
  for (int b : form.reachable_blocks(form.block_of.at(i))) best = std::max(best, form.blocks[b].rho);
  return best;
}

int kappa_chain(const FrobeniusForm& form, int i) {
  const double lambda = reachable_rho(form, i);
  if (lambda <= 0.0) return 1;
  std::vector<int> best(form.size(), -1);
  // blocks are topologically ordered, so a reverse sweep sees successors first
  for (int b = form.size() - 1; b >= 0; --b) {
    int tail = 0;
    for (int s : form.successors[b]) tail = std::max(tail, best[s]);
    best[b] = tail + (rho_equal(form.blocks[b].rho, lambda) ? 1 : 0);
  }
  return best[form.block_of.at(i)];
}

int kappa_chain(const IntMatrix& X, int i) { return kappa_chain(condensation(X), i); }

std::vector<std::pair<int, int>> near_ties(const FrobeniusForm& form) {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < form.size(); ++a)
    for (int b = a + 1; b < form.size(); ++b) {
      const double x = form.blocks[a].rho, y = form.blocks[b].rho;
      if (!rho_equal(x, y) && rho_equal(x, y, 10 * kRhoTolerance)) out.push_back({a, b});
    }
  return out;
}

ChainGrowth chain_growth(const FrobeniusForm& form, const std::vector<int>& sources, const std::vector<int>& targets) {
  const int k = form.size();
  std::vector<char> from_source(k, 0), to_target(k, 0), is_target(k, 0);
  for (int s : sources)
    for (int b : form.reachable_blocks(form.block_of.at(s))) from_source[b] = 1;
  for (int t : targets) is_target[form.block_of.at(t)] = 1;
  for (int b = k - 1; b >= 0; --b) {
    to_target[b] = is_target[b];
    for (int s : form.successors[b]) to_target[b] |= to_target[s];
  }
  ChainGrowth g;
  bool any = false;
  for (int b = 0; b < k; ++b) {
    if (!from_source[b] || !to_target[b]) continue;
    any = true;
    g.rate = std::max(g.rate, form.blocks[b].rho);
    if (form.blocks[b].irreducible) g.bounded = false;
  }
  if (!any || g.rate <= 0.0) return g;
  std::vector<int> best(k, -1);
  for (int b = k - 1; b >= 0; --b) {
    if (!to_target[b]) continue;
    int tail = is_target[b] ? 0 : -1;
    for (int s : form.successors[b])
      if (best[s] >= 0) tail = std::max(tail, best[s]);
    best[b] = tail + (rho_equal(form.blocks[b].rho, g.rate) ? 1 : 0);
  }
  int chain = 0;
  for (int s : sources) chain = std::max(chain, best[form.block_of.at(s)]);
  g.poly_exponent = std::max(chain, 1) - 1;
  return g;
}

BigRow power_row(const IntRow& u, const IntMatrix& X, int n) {
  BigRow v = u.cast<BigInt>();
  const BigMatrix B = to_big(X);
  for (int k = 0; k < n; ++k) v = (v * B).eval();
  return v;
}

std::vector<BigInt> power_norms(const IntRow& u, const IntMatrix& X, int n) {
  std::vector<BigInt> out;
  BigRow v = u.cast<BigInt>();
  const BigMatrix B = to_big(X);
  out.push_back(norm1(v));
  for (int k = 0; k < n; ++k) {
    v = (v * B).eval();
    out.push_back(norm1(v));
  }
  return out;
}

GrowthDescriptor growth_descriptor(const IntMatrix& X, const FrobeniusForm& form, const IntRow& u, int n_cap,
                                   double step_tol) {
  GrowthDescriptor g;
  std::vector<int> support;
  for (Eigen::Index a = 0; a < u.size(); ++a)
    if (u(a) > 0) support.push_back(static_cast<int>(a));
  if (support.empty()) throw std::invalid_argument("growth_descriptor needs a non-zero vector");
  for (int a : support) g.rate = std::max(g.rate, reachable_rho(form, a));
  int chain = 1;
  for (int a : support)
    if (rho_equal(reachable_rho(form, a), g.rate)) chain = std::max(chain, kappa_chain(form, a));
  g.poly_exponent = chain - 1;
  if (g.rate <= 0.0) {
    g.stop_reason = "zero";
    return g;
  }
  const double log_rate = std::log(g.rate);
  const int p = g.poly_exponent;
  auto scaled = [&](const BigInt& norm, int n) {
    if (norm.is_zero()) return 0.0;
    return std::exp(log(norm) - p * std::log(static_cast<double>(n)) - n * log_rate);
  };
  BigRow v = u.cast<BigInt>();
  const BigMatrix B = to_big(X);
  std::vector<double> r(n_cap + 1, 0.0);
  double prev = p == 0 ? scaled(norm1(v), 0) : 0.0;
  for (int n = 1; n <= n_cap; ++n) {
    v = (v * B).eval();
    r[n] = scaled(norm1(v), n);
    g.iterations = n;
    if (n > 1 && std::abs(r[n] - prev) < step_tol * r[n]) {
      g.constant = r[n];
      g.converged = true;
      g.stop_reason = "step";
      return g;
    }
    prev = r[n];
  }
  g.constant = r[n_cap];
  if (p > 0) {
    auto rich = [&](int n) { return (n * r[n] - (n / 2) * r[n / 2]) / (n - n / 2); };
    const double a = rich(n_cap), b = rich(n_cap - 2);
    g.constant = a;
    if (std::abs(a - b) < 1e-6 * std::abs(a)) {
      g.converged = true;
      g.stop_reason = "richardson";
      return g;
    }
  }
  g.stop_reason = std::abs(r[n_cap] - r[n_cap - 1]) < 1e-6 * r[n_cap] ? "cap" : "divergent";
  return g;
}

GrowthDescriptor growth_descriptor(const IntMatrix& X, const IntRow& u, int n_cap, double step_tol) {
  return growth_descriptor(X, condensation(X), u, n_cap, step_tol);
}

}  // namespace eigs
