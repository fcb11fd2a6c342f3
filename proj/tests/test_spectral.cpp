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

#include <random>

#include "eigs/spectral.hpp"
#include "fixtures.hpp"

namespace eigs {
namespace {

using test::eigen_rho;
using test::int_matrix;
using test::int_row;
using test::load;

IntMatrix staircase() {
  return int_matrix({{4, 1, 0, 0, 0, 0},
                     {0, 1, 2, 0, 0, 1},
                     {0, 3, 2, 0, 2, 0},
                     {0, 0, 0, 2, 1, 3},
                     {0, 0, 0, 1, 2, 1},
                     {0, 0, 0, 2, 0, 1}});
}

TEST(Spectral, MatricesOfSplendor) {
  const IgsSpec s = load("splendor");
  EXPECT_EQ(mass_matrix(s), int_matrix({{2, 1, 1}, {0, 4, 0}, {0, 0, 5}}));
  EXPECT_EQ(degree_matrix(s), int_matrix({{2, 0, 0, 0, 0, 0},
                                          {0, 0, 0, 1, 0, 1},
                                          {0, 0, 2, 0, 0, 0},
                                          {0, 0, 0, 2, 0, 0},
                                          {0, 0, 0, 0, 2, 0},
                                          {0, 0, 0, 0, 0, 2}}));
}

TEST(Spectral, MatricesOfBrokenDhl) {
  const IgsSpec s = load("broken_dhl");
  EXPECT_EQ(mass_matrix(s), int_matrix({{3, 1}, {0, 2}}));
  EXPECT_EQ(degree_matrix(s), int_matrix({{2, 0, 0, 0}, {0, 1, 0, 1}, {0, 0, 1, 0}, {0, 0, 0, 1}}));
}

TEST(Spectral, ChoiceFamilyOfSplendor) {
  const ChoiceFamily f = choice_family(load("splendor"));
  ASSERT_EQ(f.rows.size(), 3u);
  EXPECT_EQ(f.options(1), (std::vector<ChiVector>{int_row({1, 0, 1}), int_row({1, 1, 0})}));
  EXPECT_EQ(f.options(2), (std::vector<ChiVector>{int_row({0, 2, 0})}));
  EXPECT_EQ(f.options(3), (std::vector<ChiVector>{int_row({0, 0, 2}), int_row({0, 0, 3})}));
  EXPECT_EQ(f.product_cardinality(), "4");
}

TEST(Spectral, ChoiceFamilyBudget) {
  EXPECT_THROW(choice_family(load("splendor"), 1), BudgetError);
}

TEST(Spectral, ThreeBlockStaircase) {
  const FrobeniusForm f = condensation(staircase());
  ASSERT_EQ(f.size(), 3);
  EXPECT_EQ(f.blocks[0].indices, (std::vector<int>{0}));
  EXPECT_EQ(f.blocks[1].indices, (std::vector<int>{1, 2}));
  EXPECT_EQ(f.blocks[2].indices, (std::vector<int>{3, 4, 5}));
  EXPECT_EQ(f.dag_edges, (std::vector<std::pair<int, int>>{{0, 1}, {1, 2}}));
  for (const FrobeniusBlock& b : f.blocks) {
    EXPECT_NEAR(b.rho, eigen_rho(principal(staircase(), b.indices)), 1e-9);
    EXPECT_TRUE(b.primitive);
  }
  EXPECT_TRUE(f.primitive_frobenius());
}

TEST(Spectral, PermutationMakesUpperBlockTriangular) {
  const IntMatrix X = staircase();
  const FrobeniusForm f = condensation(X);
  const std::vector<int> p = f.permutation();
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      if (X(p[a], p[b]) != 0) EXPECT_LE(f.block_of[p[a]], f.block_of[p[b]]);
}

TEST(Spectral, PeriodicBlockIsNotPrimitive) {
  const FrobeniusForm f = condensation(int_matrix({{0, 1}, {1, 0}}));
  ASSERT_EQ(f.size(), 1);
  EXPECT_EQ(f.blocks[0].period, 2);
  EXPECT_FALSE(f.blocks[0].primitive);
  EXPECT_NEAR(f.blocks[0].rho, 1.0, 1e-12);
}

TEST(Spectral, ZeroBlockIsTrivial) {
  const FrobeniusForm f = condensation(int_matrix({{0, 1}, {0, 0}}));
  ASSERT_EQ(f.size(), 2);
  EXPECT_FALSE(f.blocks[0].irreducible);
  EXPECT_EQ(f.blocks[0].rho, 0.0);
}

TEST(Spectral, PowerIterationMatchesEigenSolver) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> entry(0, 4), size(1, 7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = size(rng);
    IntMatrix X = IntMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) X(i, j) = entry(rng) > 2 ? entry(rng) : 0;
    for (int i = 0; i < n; ++i) X(i, (i + 1) % n) = std::max<std::int64_t>(X(i, (i + 1) % n), 1);
    EXPECT_NEAR(spectral_radius(X), eigen_rho(X), 1e-9 * std::max(1.0, eigen_rho(X))) << X;
  }
}

TEST(Spectral, PerronVectorIsAnEigenvector) {
  const IntMatrix B = principal(staircase(), {3, 4, 5});
  const Eigen::VectorXd v = perron_vector(B);
  const double r = spectral_radius(B);
  EXPECT_LT((B.cast<double>() * v - r * v).lpNorm<Eigen::Infinity>(), 1e-10);
  EXPECT_GT(v.minCoeff(), 0.0);
}

TEST(Spectral, ReachabilityAndChains) {
  const FrobeniusForm f = condensation(staircase());
  EXPECT_EQ(reachability(staircase(), 0).indices, (std::vector<int>{0, 1, 2, 3, 4, 5}));
  EXPECT_EQ(reachability(f, 3).indices, (std::vector<int>{3, 4, 5}));
  EXPECT_NEAR(reachable_rho(f, 0), eigen_rho(staircase()), 1e-9);
  EXPECT_NEAR(reachable_rho(f, 1), eigen_rho(staircase()), 1e-9);
  EXPECT_EQ(kappa_chain(f, 0), 1);
  const IntMatrix J = int_matrix({{2, 1}, {0, 2}});
  EXPECT_EQ(kappa_chain(J, 0), 2);
  EXPECT_EQ(kappa_chain(J, 1), 1);
}

TEST(Spectral, GrowthDescriptorOfJordanBlock) {
  // e1 J^n has norm 2^n + n 2^(n-1) ~ (1/2) n 2^n
  const GrowthDescriptor g = growth_descriptor(int_matrix({{2, 1}, {0, 2}}), int_row({1, 0}));
  EXPECT_NEAR(g.rate, 2.0, 1e-12);
  EXPECT_EQ(g.poly_exponent, 1);
  EXPECT_NEAR(g.constant, 0.5, 1e-3);
}

TEST(Spectral, GrowthDescriptorConverges) {
  // (1,0) [[3,1],[0,2]]^n = (3^n, 3^n - 2^n)
  const GrowthDescriptor g = growth_descriptor(int_matrix({{3, 1}, {0, 2}}), int_row({1, 0}));
  EXPECT_TRUE(g.converged);
  EXPECT_NEAR(g.constant, 2.0, 1e-8);
  EXPECT_EQ(g.poly_exponent, 0);
}

TEST(Spectral, ChainGrowth) {
  const FrobeniusForm f = condensation(int_matrix({{2, 1}, {0, 2}}));
  const ChainGrowth c = chain_growth(f, {0}, {1});
  EXPECT_NEAR(c.rate, 2.0, 1e-12);
  EXPECT_EQ(c.poly_exponent, 1);
  EXPECT_FALSE(c.bounded);
}

TEST(Spectral, ExactPowerNorms) {
  const std::vector<BigInt> n = power_norms(int_row({1, 0}), int_matrix({{3, 1}, {0, 2}}), 3);
  EXPECT_EQ(n, (std::vector<BigInt>{1, 4, 14, 46}));
  const BigRow big = power_row(int_row({1}), int_matrix({{5}}), 100);
  EXPECT_NEAR(log(big(0)), 100 * std::log(5.0), 1e-9);
}

TEST(Spectral, RhoEqual) {
  EXPECT_TRUE(rho_equal(2.0, 2.0 + 1e-12));
  EXPECT_FALSE(rho_equal(2.0, 2.0 + 1e-6));
}

}  // namespace
}  // namespace eigs
