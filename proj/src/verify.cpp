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

#include "eigs/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "eigs/degree.hpp"
#include "eigs/distance.hpp"

namespace eigs {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass:
      return "pass";
    case CheckStatus::kFail:
      return "FAIL";
    case CheckStatus::kSkipped:
      return "skipped";
  }
  return "?";
}

bool VerifyReport::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const OracleCheck& c) { return c.status == CheckStatus::kFail; });
}

const OracleCheck* VerifyReport::first_failure() const {
  for (const OracleCheck& c : checks)
    if (c.status == CheckStatus::kFail) return &c;
  return nullptr;
}

namespace {

void fail(OracleCheck& c, const std::string& what) {
  if (c.status == CheckStatus::kFail) return;
  c.status = CheckStatus::kFail;
  c.detail = what;
}

std::string vec_str(const IntRow& v) {
  std::ostringstream s;
  s << '(';
  for (Eigen::Index i = 0; i < v.size(); ++i) s << (i ? "," : "") << v(i);
  s << ')';
  return s.str();
}

std::vector<int> reachable_colours(const IgsSpec& spec) {
  const FrobeniusForm Mf = condensation(mass_matrix(spec));
  const IntRow x0 = chi(spec.initial(), spec.colours);
  std::set<int> out;
  for (int a = 0; a < spec.colours; ++a)
    if (x0(a) > 0)
      for (int i : reachability(Mf, a).indices) out.insert(i + 1);
  if (spec.has_planted_pair()) out.insert(spec.initial_colour);
  return {out.begin(), out.end()};
}

}  // namespace

BlockCheck check_distance_blocks(const IgsSpec& spec, std::int64_t cap) {
  BlockCheck out;
  const IntMatrix M = mass_matrix(spec);
  const FrobeniusForm Mf = condensation(M);
  const ChoiceFamily family = choice_family(spec);
  const int K = spec.colours;
  std::vector<int> radix, digit(K, 0);
  for (const auto& row : family.rows) radix.push_back(static_cast<int>(row.size()));
  if (std::find(radix.begin(), radix.end(), 0) != radix.end()) {
    out.ok = false;
    out.detail = "a colour has no planting path";
    return out;
  }
  while (true) {
    if (out.matrices >= cap) {
      out.sampled = true;
      break;
    }
    IntMatrix D(K, K);
    for (int a = 0; a < K; ++a) D.row(a) = family.rows[a][digit[a]];
    ++out.matrices;
    for (int a = 0; a < K; ++a)
      for (int b = 0; b < K; ++b)
        if (D(a, b) > M(a, b)) {
          out.ok = false;
          out.detail = "D exceeds M at (" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")";
          return out;
        }
    const FrobeniusForm Df = condensation(D);
    for (const FrobeniusBlock& blk : Df.blocks) {
      const int host = Mf.block_of[blk.indices.front()];
      for (int i : blk.indices)
        if (Mf.block_of[i] != host) {
          out.ok = false;
          out.detail = "a block of D straddles two blocks of M";
          return out;
        }
    }
    if (Df.size() < Mf.size()) {
      out.ok = false;
      out.detail = "D has fewer blocks than M";
      return out;
    }
    int k = K - 1;
    while (k >= 0 && ++digit[k] == radix[k]) digit[k--] = 0;
    if (k < 0) break;
  }
  return out;
}

BlockCheck check_degree_blocks(const IgsSpec& spec) {
  BlockCheck out;
  const FrobeniusForm Mf = condensation(mass_matrix(spec));
  const FrobeniusForm Nf = condensation(degree_matrix(spec));
  out.matrices = 1;
  for (const FrobeniusBlock& blk : Nf.blocks) {
    const int host = Mf.block_of[blk.indices.front() / 2];
    for (int a : blk.indices)
      if (Mf.block_of[a / 2] != host) {
        out.ok = false;
        out.detail = "a block of N does not project into a single block of M";
        return out;
      }
  }
  if (Nf.size() < Mf.size()) {
    out.ok = false;
    out.detail = "N has fewer blocks than M";
  }
  return out;
}

VerifyReport verify(const IgsSpec& spec, const VerifyOptions& opt) {
  VerifyReport rep;
  auto check = [](const char* name) {
    OracleCheck c;
    c.name = name;
    return c;
  };
  OracleCheck edges = check("edge_count"), vertices = check("vertex_count"), degree = check("vertex_degree"),
              hist = check("histogram"), distance = check("planted_distance"), dblocks = check("distance_blocks"),
              nblocks = check("degree_blocks"), valid = check("validation");
  const int K = spec.colours;
  const IntMatrix M = mass_matrix(spec);
  const IntMatrix N = degree_matrix(spec);
  const IntRow x0 = chi(spec.initial(), K);
  const std::vector<BirthType> types = all_vertex_types(spec);

  try {
    const std::vector<BigInt> predicted = power_norms(x0, M, opt.n_max);
    GeneratedGraph g = iterate(spec, 0, opt.budget_edges);
    if (projected_edges(spec, opt.n_max) > BigInt(std::min(opt.budget_edges, kMaxEdgeBudget)))
      throw BudgetError("generation " + std::to_string(opt.n_max) + " exceeds the edge budget");
    std::vector<std::vector<BigInt>> origin_norms;
    for (const Origin& o : g.origins) origin_norms.push_back(power_norms(o.kappa, N, opt.n_max));
    BigInt born = BigInt(static_cast<std::int64_t>(g.vertices.size()));
    for (int n = 0; n <= opt.n_max; ++n) {
      if (n > 0) {
        g = substitute_once(g, spec);
        for (const BirthType& t : types)
          if (t.b.sum() > 0) born += birth_count(spec, t, n);
      }
      ++edges.cases;
      if (BigInt(static_cast<std::int64_t>(g.edges.size())) != predicted[n])
        fail(edges, "n=" + std::to_string(n) + ": " + std::to_string(g.edges.size()) + " edges, predicted " +
                        predicted[n].str());
      ++vertices.cases;
      if (BigInt(static_cast<std::int64_t>(g.vertices.size())) != born)
        fail(vertices, "n=" + std::to_string(n) + ": " + std::to_string(g.vertices.size()) + " vertices, predicted " +
                           born.str());
      const std::vector<std::int64_t> deg = degrees(g);
      for (std::uint32_t v = 0; v < g.vertices.size(); ++v) {
        ++degree.cases;
        const VertexRecord& r = g.vertices[v];
        const BigInt& want = origin_norms[r.origin][n - r.birth_generation];
        if (BigInt(deg[v]) != want) {
          const Origin& o = g.origins[r.origin];
          fail(degree, "n=" + std::to_string(n) + " vertex " + std::to_string(v) + " (" +
                           (o.colour ? "R" + std::to_string(o.colour) : std::string("initial")) + ":" + o.name +
                           ", born " + std::to_string(r.birth_generation) + ", type " + vec_str(o.kappa) +
                           "): degree " + std::to_string(deg[v]) + ", predicted " + want.str());
        }
      }
      ++hist.cases;
      const Histogram explicit_h = degree_histogram(g);
      const Histogram comb = combinatorial_histogram(spec, n);
      if (explicit_h != comb) {
        std::string diff;
        for (const auto& [d, c] : explicit_h) {
          auto it = comb.find(d);
          if (it == comb.end() || it->second != c) {
            diff = "degree " + d.str() + ": explicit " + c.str() + ", combinatorial " +
                   (it == comb.end() ? std::string("0") : it->second.str());
            break;
          }
        }
        if (diff.empty()) diff = "combinatorial histogram has extra degrees";
        fail(hist, "n=" + std::to_string(n) + ": " + diff);
      }
    }
  } catch (const BudgetError& e) {
    for (OracleCheck* c : {&edges, &vertices, &degree, &hist}) {
      c->status = CheckStatus::kSkipped;
      c->detail = e.what();
    }
  } catch (const std::exception& e) {
    for (OracleCheck* c : {&edges, &vertices, &degree, &hist}) fail(*c, e.what());
  }

  try {
    const ChoiceFamily family = choice_family(spec);
    for (int j : reachable_colours(spec)) {
      const IgsSpec single = with_initial_colour(spec, j);
      const BellmanState st = [&] {
        DistanceOptions o;
        o.bellman_cap = opt.n_max;
        return bellman_iterate(family, j, o);
      }();
      const std::vector<int>& trim = st.trim;
      const int pj = static_cast<int>(std::find(trim.begin(), trim.end(), j) - trim.begin());
      GeneratedGraph g = iterate(single, 0, opt.budget_edges);
      if (projected_edges(single, opt.n_max) > BigInt(std::min(opt.budget_edges, kMaxEdgeBudget)))
        throw BudgetError("single-edge graph of colour " + std::to_string(j) + " exceeds the edge budget");
      for (int n = 0; n <= opt.n_max; ++n) {
        if (n > 0) g = substitute_once(g, single);
        ++distance.cases;
        const int bfs = planted_distance(g);
        const BigInt brute = brute_force_min_product(family, j, n, opt.oracle_budget);
        const BigInt& bell = st.iterates.at(n)(pj);
        if (BigInt(bfs) != bell || bell != brute)
          fail(distance, "colour " + std::to_string(j) + ", n=" + std::to_string(n) + ": BFS " + std::to_string(bfs) +
                             ", Bellman " + bell.str() + ", brute force " + brute.str());
      }
    }
  } catch (const BudgetError& e) {
    distance.status = CheckStatus::kSkipped;
    distance.detail = e.what();
  } catch (const std::exception& e) {
    fail(distance, e.what());
  }

  try {
    BlockCheck d = check_distance_blocks(spec, opt.family_cap);
    dblocks.cases = d.matrices;
    if (!d.ok) fail(dblocks, d.detail);
    else if (d.sampled) dblocks.detail = "first " + std::to_string(d.matrices) + " matrices of the family";
    BlockCheck nb = check_degree_blocks(spec);
    nblocks.cases = 1;
    if (!nb.ok) fail(nblocks, nb.detail);
  } catch (const std::exception& e) {
    fail(dblocks, e.what());
  }

  for (const Violation& v : validate(spec)) {
    ++valid.cases;
    fail(valid, (v.colour ? "rule " + std::to_string(v.colour) + ": " : std::string()) + v.message);
  }
  if (valid.cases == 0) valid.cases = 1;

  rep.checks = {edges, vertices, degree, hist, distance, dblocks, nblocks, valid};
  return rep;
}

}  // namespace eigs
