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

#include "eigs/model.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace eigs {

using Json = nlohmann::ordered_json;

int ColouredGraph::index_of(std::string_view name) const {
  auto it = std::find(vertices.begin(), vertices.end(), name);
  return it == vertices.end() ? -1 : static_cast<int>(it - vertices.begin());
}

ColouredGraph IgsSpec::initial() const {
  if (initial_graph) return *initial_graph;
  ColouredGraph g;
  g.vertices = {"v+", "v-"};
  g.edges.push_back({0, 1, initial_colour});
  return g;
}

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw SpecError(where.empty() ? what : where + ": " + what);
}

void check_keys(const Json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!obj.is_object()) fail(where, "expected an object");
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* k) { return it.key() == k; }))
      fail(where, "unknown field \"" + it.key() + "\"");
  }
}

const Json& require(const Json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing field \"") + key + "\"");
  return *it;
}

int as_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<int>();
}

std::string as_name(const Json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a vertex name");
  return j.get<std::string>();
}

int colour_ref(const Json& j, int colours, const std::string& where) {
  const int c = as_int(j, where);
  if (c < 1 || c > colours) fail(where, "unknown colour " + std::to_string(c));
  return c;
}

ColouredGraph parse_graph(const Json& obj, int colours, const std::string& where) {
  ColouredGraph g;
  const Json& vs = require(obj, "vertices", where);
  if (!vs.is_array()) fail(where + ".vertices", "expected an array");
  for (std::size_t i = 0; i < vs.size(); ++i) {
    std::string name = as_name(vs[i], where + ".vertices[" + std::to_string(i) + "]");
    if (g.index_of(name) >= 0) fail(where + ".vertices", "duplicate vertex \"" + name + "\"");
    g.vertices.push_back(std::move(name));
  }
  const Json& es = require(obj, "edges", where);
  if (!es.is_array()) fail(where + ".edges", "expected an array");
  for (std::size_t i = 0; i < es.size(); ++i) {
    const std::string at = where + ".edges[" + std::to_string(i) + "]";
    check_keys(es[i], {"from", "to", "colour"}, at);
    GraphEdge e;
    const std::string from = as_name(require(es[i], "from", at), at + ".from");
    const std::string to = as_name(require(es[i], "to", at), at + ".to");
    e.tail = g.index_of(from);
    e.head = g.index_of(to);
    if (e.tail < 0) fail(at, "unknown vertex \"" + from + "\"");
    if (e.head < 0) fail(at, "unknown vertex \"" + to + "\"");
    e.colour = colour_ref(require(es[i], "colour", at), colours, at + ".colour");
    g.edges.push_back(e);
  }
  return g;
}

Json graph_json(const ColouredGraph& g) {
  Json out;
  out["vertices"] = g.vertices;
  Json edges = Json::array();
  for (const GraphEdge& e : g.edges)
    edges.push_back({{"from", g.vertices[e.tail]}, {"to", g.vertices[e.head]}, {"colour", e.colour}});
  out["edges"] = edges;
  return out;
}

}  // namespace

IgsSpec parse_spec(std::string_view source) {
  Json doc;
  try {
    doc = Json::parse(source.begin(), source.end());
  } catch (const Json::parse_error& e) {
    throw SpecError("syntax error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  check_keys(doc, {"colours", "initial_colour", "initial_graph", "rules"}, "");
  IgsSpec spec;
  spec.colours = as_int(require(doc, "colours", ""), "colours");
  if (spec.colours < 1) fail("colours", "must be at least 1");
  spec.initial_colour = colour_ref(require(doc, "initial_colour", ""), spec.colours, "initial_colour");
  if (auto it = doc.find("initial_graph"); it != doc.end()) {
    check_keys(*it, {"vertices", "edges"}, "initial_graph");
    spec.initial_graph = parse_graph(*it, spec.colours, "initial_graph");
  }
  const Json& rules = require(doc, "rules", "");
  if (!rules.is_array()) fail("rules", "expected an array");
  std::vector<std::optional<RuleGraph>> slots(spec.colours);
  for (std::size_t r = 0; r < rules.size(); ++r) {
    const std::string at = "rules[" + std::to_string(r) + "]";
    check_keys(rules[r], {"colour", "vertices", "beta_plus", "beta_minus", "edges"}, at);
    RuleGraph rule;
    rule.colour = colour_ref(require(rules[r], "colour", at), spec.colours, at + ".colour");
    if (slots[rule.colour - 1]) fail(at, "duplicate colour " + std::to_string(rule.colour));
    rule.graph = parse_graph(rules[r], spec.colours, at);
    const std::string bp = as_name(require(rules[r], "beta_plus", at), at + ".beta_plus");
    const std::string bm = as_name(require(rules[r], "beta_minus", at), at + ".beta_minus");
    rule.beta_plus = rule.graph.index_of(bp);
    rule.beta_minus = rule.graph.index_of(bm);
    if (rule.beta_plus < 0) fail(at, "missing planting vertex \"" + bp + "\"");
    if (rule.beta_minus < 0) fail(at, "missing planting vertex \"" + bm + "\"");
    slots[rule.colour - 1] = std::move(rule);
  }
  for (int c = 1; c <= spec.colours; ++c) {
    if (!slots[c - 1]) fail("rules", "no rule for colour " + std::to_string(c));
    spec.rules.push_back(std::move(*slots[c - 1]));
  }
  return spec;
}

IgsSpec load_spec(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SpecError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spec(buf.str());
}

std::string serialize_spec(const IgsSpec& spec) {
  Json doc;
  doc["colours"] = spec.colours;
  doc["initial_colour"] = spec.initial_colour;
  if (spec.initial_graph) doc["initial_graph"] = graph_json(*spec.initial_graph);
  Json rules = Json::array();
  for (const RuleGraph& r : spec.rules) {
    Json g = graph_json(r.graph);
    Json rule;
    rule["colour"] = r.colour;
    rule["vertices"] = g["vertices"];
    rule["beta_plus"] = r.graph.vertices.at(r.beta_plus);
    rule["beta_minus"] = r.graph.vertices.at(r.beta_minus);
    rule["edges"] = g["edges"];
    rules.push_back(rule);
  }
  doc["rules"] = rules;
  return doc.dump(2) + "\n";
}

int undirected_distance(const ColouredGraph& graph, int from, int to) {
  const int n = static_cast<int>(graph.vertices.size());
  std::vector<std::vector<int>> adj(n);
  for (const GraphEdge& e : graph.edges) {
    adj[e.tail].push_back(e.head);
    adj[e.head].push_back(e.tail);
  }
  std::vector<int> dist(n, -1);
  std::deque<int> queue{from};
  dist[from] = 0;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    if (v == to) return dist[v];
    for (int w : adj[v]) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return -1;
}

namespace {

bool connected(const ColouredGraph& g) {
  if (g.vertices.empty()) return true;
  for (int v = 1; v < static_cast<int>(g.vertices.size()); ++v)
    if (undirected_distance(g, 0, v) < 0) return false;
  return true;
}

}  // namespace

std::vector<Violation> validate(const IgsSpec& spec) {
  std::vector<Violation> out;
  if (static_cast<int>(spec.rules.size()) != spec.colours)
    out.push_back({0, "expected " + std::to_string(spec.colours) + " rules, found " + std::to_string(spec.rules.size())});
  if (spec.initial_colour < 1 || spec.initial_colour > spec.colours)
    out.push_back({0, "initial colour out of range"});
  if (spec.initial_graph) {
    for (const GraphEdge& e : spec.initial_graph->edges)
      if (e.colour < 1 || e.colour > spec.colours) out.push_back({0, "edge colour out of range in initial graph"});
  }
  for (std::size_t r = 0; r < spec.rules.size(); ++r) {
    const RuleGraph& rule = spec.rules[r];
    const int c = rule.colour;
    if (c != static_cast<int>(r) + 1) out.push_back({c, "rule out of colour order"});
    for (const GraphEdge& e : rule.graph.edges) {
      if (e.colour < 1 || e.colour > spec.colours) out.push_back({c, "edge colour out of range"});
      if (e.tail == e.head) out.push_back({c, "self-loop at \"" + rule.graph.vertices[e.tail] + "\""});
    }
    if (!connected(rule.graph)) out.push_back({c, "rule graph not connected"});
    if (rule.beta_plus == rule.beta_minus) {
      out.push_back({c, "planting vertices coincide"});
    } else {
      const int d = undirected_distance(rule.graph, rule.beta_plus, rule.beta_minus);
      if (d >= 0 && d < 2) out.push_back({c, "planted distance < 2"});
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const Violation& a, const Violation& b) { return a.colour < b.colour; });
  return out;
}

ChiVector chi(const ColouredGraph& graph, int colours) {
  ChiVector x = ChiVector::Zero(colours);
  for (const GraphEdge& e : graph.edges) x[e.colour - 1] += 1;
  return x;
}

KappaVector kappa(const ColouredGraph& graph, int v, int colours) {
  if (v < 0 || v >= static_cast<int>(graph.vertices.size())) throw std::out_of_range("vertex not found");
  KappaVector k = KappaVector::Zero(2 * colours);
  for (const GraphEdge& e : graph.edges) {
    if (e.tail == v) k[2 * (e.colour - 1)] += 1;
    if (e.head == v) k[2 * (e.colour - 1) + 1] += 1;
  }
  return k;
}

KappaVector kappa(const ColouredGraph& graph, std::string_view v, int colours) {
  return kappa(graph, graph.index_of(v), colours);
}

std::uint64_t spec_digest(const IgsSpec& spec) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : serialize_spec(spec)) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

IgsSpec with_initial_colour(const IgsSpec& spec, int colour) {
  IgsSpec out = spec;
  out.initial_colour = colour;
  out.initial_graph.reset();
  return out;
}

}  // namespace eigs
