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

#include <cmath>

#include "eigs/distance.hpp"
#include "eigs/engine.hpp"
#include "fixtures.hpp"

namespace eigs {
namespace {

using test::int_matrix;
using test::kLog3Log2;
using test::kLog5Log2;
using test::load;

TEST(Distance, TrimSets) {
  const ChoiceFamily f = choice_family(load("splendor"));
  EXPECT_EQ(trim_set(f, 1), (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(trim_set(f, 2), (std::vector<int>{2}));
  EXPECT_EQ(trim_set(f, 3), (std::vector<int>{3}));
}

TEST(Distance, BellmanMatchesBruteForce) {
  for (const char* name : {"splendor", "broken_dhl", "binary_tree", "classical_dhl"}) {
    const IgsSpec s = load(name);
    const ChoiceFamily f = choice_family(s);
    for (int j = 1; j <= s.colours; ++j) {
      DistanceOptions o;
      o.bellman_cap = 7;
      const BellmanState st = bellman_iterate(f, j, o);
      const auto pos = std::find(st.trim.begin(), st.trim.end(), j) - st.trim.begin();
      for (int n = 0; n <= 7 && n < static_cast<int>(st.iterates.size()); ++n)
        EXPECT_EQ(st.iterates[n](pos), brute_force_min_product(f, j, n)) << name << " j=" << j << " n=" << n;
    }
  }
}

TEST(Distance, BruteForceBudget) {
  EXPECT_THROW(brute_force_min_product(choice_family(load("splendor")), 1, 30, 10), BudgetError);
}

TEST(Distance, SplendorRatesAreTwo) {
  const ChoiceFamily f = choice_family(load("splendor"));
  for (int j = 1; j <= 3; ++j) {
    const LambdaEstimate e = lambda_distance(f, j);
    EXPECT_NEAR(e.value, 2.0, 1e-9) << j;
    EXPECT_TRUE(e.consistent) << j;
    EXPECT_NEAR(e.bellman.lambda_hat, 2.0, 1e-6) << j;
  }
}

TEST(Distance, BrokenDhlRates) {
  const ChoiceFamily f = choice_family(load("broken_dhl"));
  EXPECT_NEAR(lambda_distance(f, 1).value, 2.0, 1e-9);
  EXPECT_NEAR(lambda_distance(f, 2).value, 2.0, 1e-9);
}

TEST(Distance, MinMaxMinimizers) {
  const ChoiceFamily f = choice_family(load("binary_tree"));
  const auto r = min_max_rate(f, 1);
  ASSERT_TRUE(r.has_value());
  EXPECT_NEAR(r->lambda, 2.0, 1e-9);
  ASSERT_FALSE(r->minimizers.empty());
  EXPECT_EQ(trimmed_matrix(f, r->trim, r->minimizers.front()), int_matrix({{1, 1}, {0, 2}}));
}

TEST(Distance, Primitivity) {
  EXPECT_TRUE(is_primitive(int_matrix({{1, 1}, {1, 0}})));
  EXPECT_FALSE(is_primitive(int_matrix({{0, 1}, {1, 0}})));
  EXPECT_FALSE(is_primitive(int_matrix({{1, 1}, {0, 2}})));
  EXPECT_TRUE(is_primitive(int_matrix({{2}})));
  EXPECT_FALSE(is_primitive(int_matrix({{0}})));
}

TEST(Distance, StabilityDetectors) {
  const ChoiceFamily sp = choice_family(load("splendor"));
  EXPECT_FALSE(check_primitive_stability(sp, 1).stable);
  EXPECT_TRUE(check_primitive_stability(sp, 2).stable);
  EXPECT_TRUE(check_primitive_stability(sp, 3).stable);
  EXPECT_FALSE(check_primitive_stability(choice_family(load("binary_tree")), 1).stable);
  EXPECT_FALSE(check_primitive_stability(choice_family(load("broken_dhl")), 1).stable);
}

TEST(Distance, FixedPointCertificate) {
  for (const char* name : {"splendor", "broken_dhl", "classical_dhl", "binary_tree"}) {
    const IgsSpec s = load(name);
    const ChoiceFamily f = choice_family(s);
    for (int j = 1; j <= s.colours; ++j) {
      const StabilityReport r = check_primitive_stability(f, j);
      if (!r.stable) continue;
      ASSERT_TRUE(r.certificate_residual.has_value());
      EXPECT_LT(*r.certificate_residual, 1e-9) << name << j;
    }
  }
}

TEST(Distance, BellmanOperatorIsMinOverRows) {
  const ChoiceFamily f = choice_family(load("splendor"));
  Eigen::VectorXd v(3);
  v << 1.0, 2.0, 3.0;
  const Eigen::VectorXd out = bellman_operator(f, {1, 2, 3}, v);
  EXPECT_DOUBLE_EQ(out(0), 1.0 + 2.0);  // min(1+2, 1+3)
  EXPECT_DOUBLE_EQ(out(1), 4.0);
  EXPECT_DOUBLE_EQ(out(2), 6.0);
}

TEST(Distance, SplendorSpectrum) {
  const FractalSpectrum s = fractal_spectrum(load("splendor"));
  ASSERT_EQ(s.values.size(), 2u);
  EXPECT_NEAR(s.values[0], 2.0, 1e-9);
  EXPECT_NEAR(s.values[1], kLog5Log2, 1e-9);
  EXPECT_TRUE(s.multifractal);
  EXPECT_TRUE(s.bddm);
}

TEST(Distance, HausdorffDimensions) {
  EXPECT_NEAR(hausdorff_dimension(load("classical_dhl"), 1), 2.0, 1e-9);
  EXPECT_NEAR(hausdorff_dimension(load("splendor"), 1), kLog5Log2, 1e-9);
  EXPECT_NEAR(hausdorff_dimension(load("splendor"), 2), 2.0, 1e-9);
  EXPECT_NEAR(hausdorff_dimension(load("broken_dhl"), 1), kLog3Log2, 1e-9);
}

TEST(Distance, AnalysisLayers) {
  const DistanceAnalysis d = analyze_distance(load("splendor"));
  EXPECT_EQ(d.colours, (std::vector<int>{1, 2, 3}));
  const DistanceLayer& l1 = d.layer(1);
  EXPECT_NEAR(l1.lambda_D, 2.0, 1e-9);
  EXPECT_FALSE(l1.stability.stable);
  EXPECT_NEAR(l1.lambda_M_surv, 5.0, 1e-9);
  EXPECT_NEAR(d.layer(2).lambda_M_surv, 4.0, 1e-9);
  EXPECT_TRUE(d.flags_agree);
}

TEST(Distance, ClassicalDhlIsMonofractal) {
  const DistanceAnalysis d = analyze_distance(load("classical_dhl"));
  EXPECT_EQ(d.spectrum.size(), 1u);
  EXPECT_FALSE(d.multifractal);
}

TEST(Distance, Dedupe) {
  EXPECT_EQ(dedupe({2.0, 1.0, 2.0 + 1e-13, 1.5}), (std::vector<double>{1.0, 1.5, 2.0}));
}

}  // namespace
}  // namespace eigs
