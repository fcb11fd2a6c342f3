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

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "eigs/model.hpp"

namespace eigs::test {

inline std::string spec_path(const std::string& name) { return std::string(EIGS_SPEC_DIR) + "/" + name + ".json"; }
inline IgsSpec load(const std::string& name) { return load_spec(spec_path(name)); }

inline const double kLog5Log2 = std::log(5.0) / std::log(2.0);
inline const double kLog3Log2 = std::log(3.0) / std::log(2.0);

/// Spectral radius from a dense eigen-decomposition.
template <typename Derived>
double eigen_rho(const Eigen::MatrixBase<Derived>& X) {
  if (X.rows() == 0) return 0.0;
  Eigen::EigenSolver<Eigen::MatrixXd> es(X.template cast<double>());
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

inline IntMatrix int_matrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  IntMatrix X(rows.size(), rows.begin()->size());
  Eigen::Index i = 0;
  for (auto r : rows) {
    Eigen::Index j = 0;
    for (auto v : r) X(i, j++) = v;
    ++i;
  }
  return X;
}

inline IntRow int_row(std::initializer_list<std::int64_t> v) {
  IntRow r(v.size());
  Eigen::Index i = 0;
  for (auto x : v) r(i++) = x;
  return r;
}

}  // namespace eigs::test
