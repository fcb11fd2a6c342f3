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
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "eigs/model.hpp"

namespace eigs {

inline constexpr std::int64_t kDefaultEdgeBudget = 20'000'000;
inline constexpr std::int64_t kMaxEdgeBudget = (std::int64_t{1} << 31) - 1;

/// Where a vertex came from: the initial graph or an interior vertex of a rule.
struct Origin {
  int colour = 0;  // 0 = initial graph
  int rule_vertex = 0;
  std::string name;
  KappaVector kappa;
};

struct VertexRecord {
  std::uint32_t birth_generation = 0;
  std::uint32_t origin = 0;  // index into GeneratedGraph::origins
};

struct FlatEdge {
  std::uint32_t tail;
  std::uint32_t head;
  std::int32_t colour;
};

struct GeneratedGraph {
  int generation = 0;
  int colours = 1;
  std::vector<Origin> origins;
  std::vector<std::vector<std::int32_t>> interior_origin;  // [colour-1][rule vertex], -1 for planting
  std::vector<VertexRecord> vertices;
  std::vector<FlatEdge> edges;
  std::optional<std::pair<std::uint32_t, std::uint32_t>> planted_pair;

  const KappaVector& birth_type(std::uint32_t v) const { return origins[vertices[v].origin].kappa; }
};

using Histogram = std::map<BigInt, BigInt>;

/// Graph of generation 0 with provenance tables filled in.
GeneratedGraph initial_graph(const IgsSpec& spec);
GeneratedGraph substitute_once(const GeneratedGraph& g, const IgsSpec& spec);

/// ||x0 M^n||_1 with x0 = chi(Xi^0).
BigInt projected_edges(const IgsSpec& spec, int n);
GeneratedGraph iterate(const IgsSpec& spec, int n, std::int64_t budget_edges = kDefaultEdgeBudget);

int planted_distance(const GeneratedGraph& g);
Histogram degree_histogram(const GeneratedGraph& g);
std::vector<std::int64_t> degrees(const GeneratedGraph& g);
/// Exact diameter of the underlying undirected graph via all-pairs BFS.
int diameter(const GeneratedGraph& g);

void write_edge_list(const GeneratedGraph& g, std::ostream& out);
void write_provenance(const GeneratedGraph& g, std::ostream& out);

}  // namespace eigs
