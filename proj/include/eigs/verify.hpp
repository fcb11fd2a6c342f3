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
#include <vector>

#include "eigs/engine.hpp"
#include "eigs/model.hpp"
#include "eigs/spectral.hpp"

namespace eigs {

enum class CheckStatus { kPass, kFail, kSkipped };

struct OracleCheck {
  std::string name;
  CheckStatus status = CheckStatus::kPass;
  std::string detail;  // first counterexample, or the reason for a skip
  std::int64_t cases = 0;
};

struct VerifyReport {
  std::vector<OracleCheck> checks;

  bool passed() const;
  const OracleCheck* first_failure() const;
};

struct VerifyOptions {
  int n_max = 5;
  std::int64_t budget_edges = kDefaultEdgeBudget;
  std::int64_t oracle_budget = 5'000'000;
  std::int64_t family_cap = 4096;  // assembled D matrices checked for block containment
};

VerifyReport verify(const IgsSpec& spec, const VerifyOptions& opt = {});

struct BlockCheck {
  bool ok = true;
  std::string detail;
  std::int64_t matrices = 0;
  bool sampled = false;
};

/// Every assembled D: blocks sit inside M blocks and h_D >= h_M.
BlockCheck check_distance_blocks(const IgsSpec& spec, std::int64_t cap = 4096);
/// N blocks project into M blocks and h_N >= h_M.
BlockCheck check_degree_blocks(const IgsSpec& spec);

std::string to_string(CheckStatus s);

}  // namespace eigs
