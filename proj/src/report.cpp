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

#include "eigs/report.hpp"

#include <cstdio>

namespace eigs {

using Json = nlohmann::ordered_json;

namespace {

Json row_json(const IntRow& r) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < r.size(); ++i) a.push_back(r(i));
  return a;
}

Json one_based(const std::vector<int>& idx, int offset) {
  Json a = Json::array();
  for (int i : idx) a.push_back(i + offset);
  return a;
}

Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

std::string hex_digest(std::uint64_t h) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json distance_section(const DistanceAnalysis& d) {
  Json out;
  Json colours = Json::array();
  for (const DistanceLayer& l : d.layers) {
    Json c;
    c["colour"] = l.colour;
    c["lambda_D"] = l.lambda_D;
    c["lambda_D_source"] = l.lambda_source;
    c["bellman_converged"] = l.bellman_converged;
    c["stable"] = l.stability.stable;
    c["stability_detail"] = l.stability.detail;
    c["trim"] = l.stability.trim;
    c["certificate_residual"] = optional_number(l.stability.certificate_residual);
    c["I_dist"] = l.I_dist;
    Json blocks = Json::array();
    for (const auto& b : l.M_dist_form.blocks) {
      Json idx = Json::array();
      for (int i : b.indices) idx.push_back(l.I_dist[i]);
      blocks.push_back({{"colours", idx}, {"rho", b.rho}, {"primitive", b.primitive}});
    }
    c["M_dist_blocks"] = blocks;
    c["M_dist_primitive_frobenius"] = l.M_dist_primitive_frobenius;
    c["lambda_M_surv"] = l.lambda_M_surv;
    c["dim_H"] = optional_number(l.dim_H);
    if (!l.error.empty()) c["error"] = l.error;
    colours.push_back(c);
  }
  out["colours"] = colours;
  out["I_dist_initial"] = d.I_dist_initial;
  out["spectrum"] = d.spectrum;
  out["multifractal"] = d.multifractal;
  out["bddm"] = d.bddm;
  return out;
}

Json degree_section(const DegreeAnalysis& d) {
  Json out;
  out["applicable"] = d.applicable;
  if (!d.reason.empty()) out["reason"] = d.reason;
  out["lambda_U"] = d.lambda_U;
  out["tau_deg"] = d.tau_deg;
  out["C_deg"] = d.C_deg;
  Json types = Json::array();
  for (const BirthType& t : d.types) {
    Json j;
    j["u"] = row_json(t.u);
    j["origins"] = t.origins;
    j["mu"] = t.mu;
    j["b"] = row_json(t.b);
    j["lambda"] = t.lambda;
    j["tau"] = t.tau;
    j["dominant"] = t.dominant;
    j["surviving"] = t.surviving;
    if (t.dominant) {
      j["c_deg"] = t.c_deg.constant;
      j["c_deg_stop"] = t.c_deg.stop_reason;
      j["c_deg_converged"] = t.c_deg.converged;
      j["alpha"] = optional_number(t.alpha);
    }
    if (t.surviving) {
      j["birth_rate"] = t.birth_growth.rate;
      j["birth_q"] = t.birth_growth.poly_exponent + 1;
    }
    types.push_back(j);
  }
  out["types"] = types;
  Json classes = Json::array();
  for (const DegreeClass& K : d.classes) {
    Json members = Json::array();
    for (int i : K.members) members.push_back(row_json(d.types[i].u));
    classes.push_back({{"members", members},
                       {"shifts", K.shifts},
                       {"alpha", K.alpha},
                       {"eff_rate", K.eff_rate},
                       {"q", K.q},
                       {"numeric_rate", K.numeric_rate}});
  }
  out["classes"] = classes;
  out["dimension"] = optional_number(d.dimension);
  out["scale_free"] = d.scale_free;
  out["spectrum"] = d.spectrum;
  out["bedm"] = d.bedm;
  out["multiscale_free"] = d.multiscale_free;
  return out;
}

}  // namespace

Json to_json(const IntMatrix& X) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < X.rows(); ++i) rows.push_back(row_json(X.row(i)));
  return rows;
}

Json to_json(const FrobeniusForm& form) {
  Json out;
  Json blocks = Json::array();
  for (const FrobeniusBlock& b : form.blocks)
    blocks.push_back({{"indices", one_based(b.indices, 1)},
                      {"rho", b.rho},
                      {"irreducible", b.irreducible},
                      {"primitive", b.primitive},
                      {"period", b.period}});
  out["blocks"] = blocks;
  Json edges = Json::array();
  for (auto [a, b] : form.dag_edges) edges.push_back({a + 1, b + 1});
  out["dag_edges"] = edges;
  out["primitive_frobenius"] = form.primitive_frobenius();
  return out;
}

AnalysisReport analyze(const IgsSpec& spec, const ReportOptions& opt) {
  AnalysisReport rep;
  Json& j = rep.json;
  j["schema"] = kReportSchema;
  j["tool_version"] = kToolVersion;
  j["spec_digest"] = hex_digest(spec_digest(spec));
  const std::vector<Violation> violations = validate(spec);
  Json v = Json::array();
  for (const Violation& x : violations) v.push_back({{"colour", x.colour}, {"message", x.message}});
  j["validation"] = {{"valid", violations.empty()}, {"violations", v}};

  Json flags;
  flags["stability_violated"] = Json::array();
  flags["M_dist_not_primitive_frobenius"] = Json::array();
  flags["bellman_inconsistent"] = Json::array();
  flags["near_ties"] = Json::array();
  flags["c_deg_not_converged"] = Json::array();

  Json matrices;
  try {
    const IntMatrix M = mass_matrix(spec), N = degree_matrix(spec);
    const FrobeniusForm Mf = condensation(M), Nf = condensation(N);
    matrices["M"] = to_json(M);
    matrices["N"] = to_json(N);
    matrices["frobenius_M"] = to_json(Mf);
    matrices["frobenius_N"] = to_json(Nf);
    for (auto [a, b] : near_ties(Mf)) flags["near_ties"].push_back({"M", a + 1, b + 1});
    for (auto [a, b] : near_ties(Nf)) flags["near_ties"].push_back({"N", a + 1, b + 1});
    const ChoiceFamily family = choice_family(spec);
    Json cf = Json::array();
    for (const auto& row : family.rows) {
      Json opts = Json::array();
      for (const ChiVector& d : row) opts.push_back(row_json(d));
      cf.push_back(opts);
    }
    matrices["choice_family"] = cf;
    matrices["choice_product"] = family.product_cardinality();
  } catch (const std::exception& e) {
    matrices["error"] = e.what();
    rep.hard_failure = true;
  }
  j["matrices"] = matrices;

  try {
    const DistanceAnalysis d = analyze_distance(spec, opt.distance);
    j["distance"] = distance_section(d);
    for (const DistanceLayer& l : d.layers) {
      if (!l.stability.stable) flags["stability_violated"].push_back(l.colour);
      if (!l.M_dist_primitive_frobenius) flags["M_dist_not_primitive_frobenius"].push_back(l.colour);
    }
    if (!d.flags_agree) j["distance"]["error"] = "multifractal and divergent-mass flags disagree";
    for (const DistanceLayer& l : d.layers)
      if (!l.bellman_consistent) flags["bellman_inconsistent"].push_back(l.colour);
  } catch (const std::exception& e) {
    j["distance"] = {{"error", e.what()}};
    rep.hard_failure = true;
  }

  try {
    const DegreeAnalysis d = analyze_degree(spec, opt.degree);
    j["degree"] = degree_section(d);
    for (const BirthType& t : d.types)
      if (t.dominant && !t.c_deg.stop_reason.empty() && !t.c_deg.converged) flags["c_deg_not_converged"].push_back(row_json(t.u));
  } catch (const std::exception& e) {
    j["degree"] = {{"error", e.what()}};
    rep.hard_failure = true;
  }
  j["flags"] = flags;
  return rep;
}

}  // namespace eigs
