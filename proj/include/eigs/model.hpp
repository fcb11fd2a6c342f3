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
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "eigs/bigint.hpp"
#include "eigs/errors.hpp"

namespace eigs {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using RowVector = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

using IntMatrix = Matrix<std::int64_t>;
using IntRow = RowVector<std::int64_t>;
using BigRow = RowVector<BigInt>;

/// Edge per colour counts; entry i-1 holds colour i.
using ChiVector = IntRow;
/// Out/in counts per colour; entries 2(i-1) and 2(i-1)+1 hold colour i.
using KappaVector = IntRow;

struct GraphEdge {
  int tail = 0;
  int head = 0;
  int colour = 1;
  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

/// Directed multigraph with named vertices and coloured edges.
struct ColouredGraph {
  std::vector<std::string> vertices;
  std::vector<GraphEdge> edges;

  int index_of(std::string_view name) const;  // -1 if absent
  friend bool operator==(const ColouredGraph&, const ColouredGraph&) = default;
};

struct RuleGraph {
  int colour = 1;
  ColouredGraph graph;
  int beta_plus = 0;
  int beta_minus = 0;
  friend bool operator==(const RuleGraph&, const RuleGraph&) = default;
};

struct IgsSpec {
  int colours = 1;
  int initial_colour = 1;
  std::optional<ColouredGraph> initial_graph;
  std::vector<RuleGraph> rules;  // rules[i-1] is the rule of colour i

  const RuleGraph& rule(int colour) const { return rules.at(colour - 1); }
  /// Xi^0: the explicit initial graph or the single edge v+ -> v-.
  ColouredGraph initial() const;
  bool has_planted_pair() const { return !initial_graph.has_value(); }
  friend bool operator==(const IgsSpec&, const IgsSpec&) = default;
};

struct Violation {
  int colour = 0;  // 0 = initial graph or whole spec
  std::string message;
  friend bool operator==(const Violation&, const Violation&) = default;
};

IgsSpec parse_spec(std::string_view source);
IgsSpec load_spec(const std::string& path);
std::string serialize_spec(const IgsSpec& spec);

std::vector<Violation> validate(const IgsSpec& spec);

ChiVector chi(const ColouredGraph& graph, int colours);
KappaVector kappa(const ColouredGraph& graph, int v, int colours);
KappaVector kappa(const ColouredGraph& graph, std::string_view v, int colours);

/// Undirected BFS distance, -1 when unreachable. Parallel edges collapse.
int undirected_distance(const ColouredGraph& graph, int from, int to);

/// 64-bit FNV-1a over the canonical serialization.
std::uint64_t spec_digest(const IgsSpec& spec);

/// Single-edge spec variant Xi_j with initial colour j.
IgsSpec with_initial_colour(const IgsSpec& spec, int colour);

}  // namespace eigs
