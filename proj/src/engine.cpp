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

#include "eigs/engine.hpp"

#include <algorithm>
#include <deque>

#include "eigs/spectral.hpp"

namespace eigs {

GeneratedGraph initial_graph(const IgsSpec& spec) {
  GeneratedGraph g;
  g.colours = spec.colours;
  const ColouredGraph xi0 = spec.initial();
  for (int v = 0; v < static_cast<int>(xi0.vertices.size()); ++v) {
    g.origins.push_back({0, v, xi0.vertices[v], kappa(xi0, v, spec.colours)});
    g.vertices.push_back({0, static_cast<std::uint32_t>(v)});
  }
  for (const GraphEdge& e : xi0.edges)
    g.edges.push_back({static_cast<std::uint32_t>(e.tail), static_cast<std::uint32_t>(e.head), e.colour});
  g.interior_origin.resize(spec.colours);
  for (int c = 1; c <= spec.colours; ++c) {
    const RuleGraph& r = spec.rule(c);
    auto& slot = g.interior_origin[c - 1];
    slot.assign(r.graph.vertices.size(), -1);
    for (int v = 0; v < static_cast<int>(r.graph.vertices.size()); ++v) {
      if (v == r.beta_plus || v == r.beta_minus) continue;
      slot[v] = static_cast<std::int32_t>(g.origins.size());
      g.origins.push_back({c, v, r.graph.vertices[v], kappa(r.graph, v, spec.colours)});
    }
  }
  if (spec.has_planted_pair()) g.planted_pair = {0u, 1u};
  return g;
}

GeneratedGraph substitute_once(const GeneratedGraph& g, const IgsSpec& spec) {
  GeneratedGraph out;
  out.generation = g.generation + 1;
  out.colours = g.colours;
  out.origins = g.origins;
  out.interior_origin = g.interior_origin;
  out.vertices = g.vertices;
  out.planted_pair = g.planted_pair;
  std::size_t edge_total = 0;
  for (const FlatEdge& e : g.edges) edge_total += spec.rule(e.colour).graph.edges.size();
  out.edges.reserve(edge_total);
  const auto birth = static_cast<std::uint32_t>(out.generation);
  std::vector<std::uint32_t> local;
  for (const FlatEdge& e : g.edges) {
    const RuleGraph& r = spec.rule(e.colour);
    const auto& slot = g.interior_origin[e.colour - 1];
    local.assign(r.graph.vertices.size(), 0);
    for (std::size_t v = 0; v < r.graph.vertices.size(); ++v) {
      if (slot[v] < 0) continue;
      local[v] = static_cast<std::uint32_t>(out.vertices.size());
      out.vertices.push_back({birth, static_cast<std::uint32_t>(slot[v])});
    }
    local[r.beta_minus] = e.head;
    local[r.beta_plus] = e.tail;
    for (const GraphEdge& re : r.graph.edges) out.edges.push_back({local[re.tail], local[re.head], re.colour});
  }
  return out;
}

BigInt projected_edges(const IgsSpec& spec, int n) {
  return norm1(power_row(chi(spec.initial(), spec.colours), mass_matrix(spec), n));
}

GeneratedGraph iterate(const IgsSpec& spec, int n, std::int64_t budget_edges) {
  if (n < 0) throw std::invalid_argument("generation must be non-negative");
  const std::int64_t budget = std::min(budget_edges, kMaxEdgeBudget);
  const std::vector<BigInt> counts = power_norms(chi(spec.initial(), spec.colours), mass_matrix(spec), n);
  for (int k = 0; k <= n; ++k)
    if (counts[k] > BigInt(budget))
      throw BudgetError("generation " + std::to_string(n) + " projects " + counts[n].str() + " edges (generation " +
                        std::to_string(k) + " already needs " + counts[k].str() + "), budget is " +
                        std::to_string(budget));
  GeneratedGraph g = initial_graph(spec);
  for (int k = 0; k < n; ++k) g = substitute_once(g, spec);
  return g;
}

namespace {

struct Adjacency {
  std::vector<std::uint64_t> offset;
  std::vector<std::uint32_t> target;
};

Adjacency undirected(const GeneratedGraph& g) {
  Adjacency adj;
  const std::size_t n = g.vertices.size();
  adj.offset.assign(n + 1, 0);
  for (const FlatEdge& e : g.edges) {
    ++adj.offset[e.tail + 1];
    ++adj.offset[e.head + 1];
  }
  for (std::size_t v = 0; v < n; ++v) adj.offset[v + 1] += adj.offset[v];
  adj.target.resize(adj.offset[n]);
  std::vector<std::uint64_t> fill(adj.offset.begin(), adj.offset.end() - 1);
  for (const FlatEdge& e : g.edges) {
    adj.target[fill[e.tail]++] = e.head;
    adj.target[fill[e.head]++] = e.tail;
  }
  return adj;
}

std::vector<std::int32_t> bfs(const Adjacency& adj, std::uint32_t source) {
  std::vector<std::int32_t> dist(adj.offset.size() - 1, -1);
  std::vector<std::uint32_t> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint32_t v = queue[head];
    for (std::uint64_t k = adj.offset[v]; k < adj.offset[v + 1]; ++k) {
      const std::uint32_t w = adj.target[k];
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

}  // namespace

int planted_distance(const GeneratedGraph& g) {
  if (!g.planted_pair) throw std::logic_error("graph has no planted pair");
  const auto dist = bfs(undirected(g), g.planted_pair->first);
  const int d = dist[g.planted_pair->second];
  if (d < 0) throw AnalysisError("planting vertices are disconnected in generation " + std::to_string(g.generation));
  return d;
}

std::vector<std::int64_t> degrees(const GeneratedGraph& g) {
  std::vector<std::int64_t> deg(g.vertices.size(), 0);
  for (const FlatEdge& e : g.edges) {
    ++deg[e.tail];
    ++deg[e.head];
  }
  return deg;
}

Histogram degree_histogram(const GeneratedGraph& g) {
  std::map<std::int64_t, std::int64_t> small;
  for (std::int64_t d : degrees(g)) ++small[d];
  Histogram h;
  for (auto [d, c] : small) h.emplace(BigInt(d), BigInt(c));
  return h;
}

int diameter(const GeneratedGraph& g) {
  const Adjacency adj = undirected(g);
  int best = 0;
  for (std::uint32_t v = 0; v < g.vertices.size(); ++v) {
    for (std::int32_t d : bfs(adj, v)) {
      if (d < 0) throw AnalysisError("graph is disconnected");
      best = std::max(best, static_cast<int>(d));
    }
  }
  return best;
}

void write_edge_list(const GeneratedGraph& g, std::ostream& out) {
  for (const FlatEdge& e : g.edges) out << e.tail << ' ' << e.head << ' ' << e.colour << '\n';
}

void write_provenance(const GeneratedGraph& g, std::ostream& out) {
  for (std::uint32_t v = 0; v < g.vertices.size(); ++v) {
    const Origin& o = g.origins[g.vertices[v].origin];
    out << v << ' ' << g.vertices[v].birth_generation << ' ';
    for (Eigen::Index i = 0; i < o.kappa.size(); ++i) out << (i ? "," : "") << o.kappa(i);
    out << ' ' << (o.colour == 0 ? std::string("initial:") : "R" + std::to_string(o.colour) + ":") << o.name << '\n';
  }
}

}  // namespace eigs
