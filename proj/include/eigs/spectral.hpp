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
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "eigs/model.hpp"

namespace eigs {

inline constexpr double kRhoTolerance = 1e-9;

/// |a-b| <= tol * max(|a|,|b|,1)
bool rho_equal(double a, double b, double tol = kRhoTolerance);

IntMatrix mass_matrix(const IgsSpec& spec);
IntMatrix degree_matrix(const IgsSpec& spec);

/// Per-colour sets of chi vectors of simple planting-to-planting paths.
struct ChoiceFamily {
  std::vector<std::vector<ChiVector>> rows;  // rows[i-1] = V_i, sorted, unique

  const std::vector<ChiVector>& options(int colour) const { return rows.at(colour - 1); }
  /// Product of |V_i| as a decimal string (may be huge).
  std::string product_cardinality() const;
};

ChoiceFamily choice_family(const IgsSpec& spec, std::int64_t path_budget = 1'000'000);

struct FrobeniusBlock {
  std::vector<int> indices;  // sorted, 0-based
  double rho = 0.0;
  bool irreducible = false;  // false only for a 1x1 zero block
  bool primitive = false;
  int period = 0;  // 0 for trivial blocks
};

/// Strongly connected block decomposition of a non-negative square matrix.
struct FrobeniusForm {
  std::vector<FrobeniusBlock> blocks;  // topological order, sources first
  std::vector<int> block_of;
  std::vector<std::pair<int, int>> dag_edges;  // block -> block, sorted
  std::vector<std::vector<int>> successors;

  int size() const { return static_cast<int>(blocks.size()); }
  bool primitive_frobenius() const;
  /// Blocks reachable from block b, including b, ascending.
  std::vector<int> reachable_blocks(int b) const;
  std::vector<int> permutation() const;
};

FrobeniusForm condensation(const IntMatrix& X);

double spectral_radius_impl(const Matrix<double>& block);
Eigen::VectorXd perron_vector_impl(const Matrix<double>& block);

/// Perron root of an irreducible (or 1x1) non-negative block.
template <typename Derived>
double spectral_radius(const Eigen::MatrixBase<Derived>& block) {
  return spectral_radius_impl(block.template cast<double>());
}

/// Right Perron vector of an irreducible block, scaled to max entry 1.
template <typename Derived>
Eigen::VectorXd perron_vector(const Eigen::MatrixBase<Derived>& block) {
  return perron_vector_impl(block.template cast<double>());
}

/// Principal submatrix on an index set.
template <typename Derived>
Matrix<typename Derived::Scalar> principal(const Eigen::MatrixBase<Derived>& X, const std::vector<int>& idx) {
  Matrix<typename Derived::Scalar> out(idx.size(), idx.size());
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b < idx.size(); ++b) out(a, b) = X(idx[a], idx[b]);
  return out;
}

struct Reach {
  std::vector<int> indices;  // r_X(i), 0-based ascending, contains i
  std::vector<int> blocks;   // reachable blocks, ascending
};

Reach reachability(const IntMatrix& X, int i);
Reach reachability(const FrobeniusForm& form, int i);

/// Largest block radius among blocks reachable from index i.
double reachable_rho(const FrobeniusForm& form, int i);

/// Max number of blocks of maximal reachable radius along a chain from i.
int kappa_chain(const FrobeniusForm& form, int i);
int kappa_chain(const IntMatrix& X, int i);

/// Pairs of blocks whose radii differ but lie within 10x the tie tolerance.
std::vector<std::pair<int, int>> near_ties(const FrobeniusForm& form);

struct GrowthDescriptor {
  double rate = 0.0;
  int poly_exponent = 0;
  double constant = 0.0;
  bool converged = false;
  std::string stop_reason;  // "step", "cap", "richardson", "divergent", "zero"
  int iterations = 0;
};

/// Growth of ||u X^n||_1 ~ constant * n^poly * rate^n.
GrowthDescriptor growth_descriptor(const IntMatrix& X, const IntRow& u, int n_cap = 400, double step_tol = 1e-9);
GrowthDescriptor growth_descriptor(const IntMatrix& X, const FrobeniusForm& form, const IntRow& u, int n_cap = 400,
                                   double step_tol = 1e-9);

/// Exact rate and polynomial exponent of u X^n w^T from the condensation.
struct ChainGrowth {
  double rate = 0.0;
  int poly_exponent = 0;
  bool bounded = true;  // no nontrivial block between support and target
};
ChainGrowth chain_growth(const FrobeniusForm& form, const std::vector<int>& sources, const std::vector<int>& targets);

using BigMatrix = Matrix<BigInt>;

template <typename Derived>
Matrix<BigInt> to_big(const Eigen::MatrixBase<Derived>& X) {
  return X.template cast<BigInt>();
}

template <typename Derived>
BigInt norm1(const Eigen::MatrixBase<Derived>& v) {
  BigInt s = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) s += v(i) < BigInt(0) ? -BigInt(v(i)) : BigInt(v(i));
  return s;
}

/// u X^n in exact arithmetic.
BigRow power_row(const IntRow& u, const IntMatrix& X, int n);
/// ||u X^k||_1 for k = 0..n.
std::vector<BigInt> power_norms(const IntRow& u, const IntMatrix& X, int n);

}  // namespace eigs
