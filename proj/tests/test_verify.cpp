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

#include "eigs/verify.hpp"
#include "fixtures.hpp"

namespace eigs {
namespace {

using test::load;

TEST(Verify, ReferenceSystemsPass) {
  for (const char* name : {"splendor", "broken_dhl", "binary_tree", "classical_dhl"}) {
    const VerifyReport r = verify(load(name));
    EXPECT_TRUE(r.passed()) << name << ": " << (r.first_failure() ? r.first_failure()->detail : "");
    for (const OracleCheck& c : r.checks) {
      EXPECT_NE(c.status, CheckStatus::kSkipped) << name << " " << c.name;
      EXPECT_GT(c.cases, 0) << name << " " << c.name;
    }
  }
}

TEST(Verify, CorruptedFixtureFailsWithCounterexample) {
  const VerifyReport r = verify(load("corrupted"));
  ASSERT_FALSE(r.passed());
  const OracleCheck* f = r.first_failure();
  ASSERT_NE(f, nullptr);
  EXPECT_FALSE(f->detail.empty());
}

TEST(Verify, BudgetSkipsInsteadOfFailing) {
  VerifyOptions o;
  o.n_max = 5;
  o.budget_edges = 10;
  const VerifyReport r = verify(load("splendor"), o);
  EXPECT_EQ(r.checks[0].status, CheckStatus::kSkipped);
  EXPECT_TRUE(r.passed());
}

TEST(Verify, BlockChecks) {
  for (const char* name : {"splendor", "broken_dhl", "binary_tree"}) {
    EXPECT_TRUE(check_distance_blocks(load(name)).ok) << name;
    EXPECT_TRUE(check_degree_blocks(load(name)).ok) << name;
  }
}

}  // namespace
}  // namespace eigs
