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

#include <gtest/gtest.h>

#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "eigs/engine.hpp"
#include "eigs/spectral.hpp"
#include "fixtures.hpp"

namespace eigs {
namespace {

using test::load;

// plain adjacency-list BFS as an independent oracle
int bfs_oracle(const GeneratedGraph& g, std::uint32_t s, std::uint32_t t) {
  std::map<std::uint32_t, std::vector<std::uint32_t>> adj;
  for (const FlatEdge& e : g.edges) {
    adj[e.tail].push_back(e.head);
    adj[e.head].push_back(e.tail);
  }
  std::map<std::uint32_t, int> dist{{s, 0}};
  std::deque<std::uint32_t> q{s};
  while (!q.empty()) {
    const std::uint32_t v = q.front();
    q.pop_front();
    if (v == t) return dist[v];
    for (std::uint32_t w : adj[v])
      if (!dist.count(w)) {
        dist[w] = dist[v] + 1;
        q.push_back(w);
      }
  }
  return -1;
}

TEST(Engine, InitialGraph) {
  const GeneratedGraph g = initial_graph(load("splendor"));
  EXPECT_EQ(g.vertices.size(), 2u);
  ASSERT_EQ(g.edges.size(), 1u);
  EXPECT_EQ(g.edges[0].colour, 1);
  ASSERT_TRUE(g.planted_pair.has_value());
  EXPECT_EQ(planted_distance(g), 1);
}

TEST(Engine, BrokenDhlEdgeCounts) {
  const IgsSpec s = load("broken_dhl");
  GeneratedGraph g = initial_graph(s);
  std::vector<std::size_t> counts{g.edges.size()};
  for (int n = 1; n <= 3; ++n) counts.push_back((g = substitute_once(g, s)).edges.size());
  EXPECT_EQ(counts, (std::vector<std::size_t>{1, 4, 14, 46}));
}

TEST(Engine, SplendorSecondGenerationHas17Edges) {
  const GeneratedGraph g = iterate(load("splendor"), 2);
  EXPECT_EQ(g.edges.size(), 17u);
  std::ostringstream os;
  write_edge_list(g, os);
  const std::string text = os.str();
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 17);
}

TEST(Engine, ColourCountsFollowMassMatrix) {
  const IgsSpec s = load("splendor");
  const GeneratedGraph g = iterate(s, 4);
  IntRow c = IntRow::Zero(3);
  for (const FlatEdge& e : g.edges) c(e.colour - 1) += 1;
  const BigRow want = power_row(chi(s.initial(), 3), mass_matrix(s), 4);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(BigInt(c(i)), want(i));
}

TEST(Engine, BudgetRefusesBeforeWork) {
  try {
    iterate(load("splendor"), 20);
    FAIL() << "expected a budget error";
  } catch (const BudgetError& e) {
    EXPECT_NE(std::string(e.what()).find(projected_edges(load("splendor"), 20).str()), std::string::npos);
  }
  EXPECT_THROW(iterate(load("broken_dhl"), 3, 45), BudgetError);
  EXPECT_NO_THROW(iterate(load("broken_dhl"), 3, 46));
}

TEST(Engine, PlantedDistanceMatchesOracle) {
  for (const char* name : {"splendor", "broken_dhl", "classical_dhl"}) {
    const IgsSpec s = load(name);
    GeneratedGraph g = initial_graph(s);
    for (int n = 0; n <= 5; ++n) {
      if (n) g = substitute_once(g, s);
      EXPECT_EQ(planted_distance(g), bfs_oracle(g, g.planted_pair->first, g.planted_pair->second)) << name << n;
    }
  }
}

TEST(Engine, ClassicalDhlDistanceDoubles) {
  const IgsSpec s = load("classical_dhl");
  GeneratedGraph g = initial_graph(s);
  for (int n = 1; n <= 6; ++n) {
    g = substitute_once(g, s);
    EXPECT_EQ(planted_distance(g), 1 << n);
  }
}

TEST(Engine, DegreesAndHistogram) {
  const GeneratedGraph g = iterate(load("classical_dhl"), 2);
  std::map<std::uint32_t, std::int64_t> d;
  for (const FlatEdge& e : g.edges) {
    ++d[e.tail];
    ++d[e.head];
  }
  const std::vector<std::int64_t> deg = degrees(g);
  Histogram h;
  for (std::uint32_t v = 0; v < g.vertices.size(); ++v) {
    EXPECT_EQ(deg[v], d[v]);
    h[BigInt(deg[v])] += 1;
  }
  EXPECT_EQ(degree_histogram(g), h);
  // 16 edges: the two poles have degree 4, the two first-generation vertices 4, eight newborns degree 2
  EXPECT_EQ(h, (Histogram{{BigInt(2), BigInt(8)}, {BigInt(4), BigInt(4)}}));
}

TEST(Engine, Diameter) {
  EXPECT_EQ(diameter(iterate(load("classical_dhl"), 0)), 1);
  EXPECT_EQ(diameter(iterate(load("classical_dhl"), 1)), 2);
}

TEST(Engine, ProvenanceRecordsBirthAndType) {
  const GeneratedGraph g = iterate(load("broken_dhl"), 1);
  std::ostringstream os;
  write_provenance(g, os);
  const std::string text = os.str();
  EXPECT_NE(text.find("initial:v+"), std::string::npos);
  EXPECT_NE(text.find("R1:x"), std::string::npos);
  EXPECT_NE(text.find("R1:y"), std::string::npos);
  for (std::uint32_t v = 2; v < g.vertices.size(); ++v) EXPECT_EQ(g.vertices[v].birth_generation, 1u);
}

TEST(Engine, ExplicitInitialGraph) {
  const GeneratedGraph g = initial_graph(load("binary_tree"));
  EXPECT_EQ(g.vertices.size(), 3u);
  EXPECT_EQ(g.edges.size(), 2u);
  EXPECT_FALSE(g.planted_pair.has_value());
}

}  // namespace
}  // namespace eigs
