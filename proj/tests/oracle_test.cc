// Copyright 2026 The lexmatch Authors
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


#include "lexmatch/oracle.h"

#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "lexmatch/error.h"
#include "lexmatch/generate.h"
#include "lexmatch/hardness.h"
#include "lexmatch/ranked.h"
#include "lexmatch/stability.h"
#include "testing/naive.h"

namespace lexmatch {
namespace {

using testing::Example4x2;

TEST(OracleTest, Example4x2) {
  const SolverReport r = OracleLeximin(Example4x2(), false, true);
  EXPECT_EQ(r.algorithm, "oracle");
  EXPECT_EQ(testing::ToTuple(r.leximin.values()),
            (testing::Tuple{3, 4, 9, 16, 100, 100}));
  EXPECT_EQ(r.candidates, 5);
  EXPECT_EQ(r.boundary, (BoundaryVector{1, 3}));
}

TEST(OracleTest, SquareRankedGivesIdentity) {
  const Instance in =
      Instance::Isometric({{9, 8, 7}, {6, 5, 4}, {3, 2, 1}}, {3, 3, 3});
  EXPECT_EQ(OracleLeximin(in, true, true).matching.assignment(),
            (std::vector<int>{0, 1, 2}));
}

TEST(OracleTest, SubsetSumImage) {
  const Instance in = SubsetSumToSmo({1, 2}, 3);
  const SolverReport r = OracleLeximin(in, true, true);
  EXPECT_EQ(ComputeAgentValues(in, r.matching).colleges.back(), Value(3));
}

TEST(OracleTest, BudgetRefusal) {
  GenSpec spec;
  spec.kind = GenKind::kStrict;
  spec.n = 12;
  spec.m = 3;
  const Instance in = Generate(spec);
  try {
    OracleLeximin(in, false, true, OracleBudget{1000});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBudgetExceeded);
  }
  try {
    OracleLeximin(Example4x2(), false, true, OracleBudget{4});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBudgetExceeded);
  }
}

TEST(OracleTest, InfeasibleWhenNothingQualifies) {
  try {
    OracleLeximin(Example4x2({1, 2}), true, true);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInfeasible);
  }
}

TEST(OracleTest, RankedAndGeneralPathsAgree) {
  std::mt19937_64 rng(606);
  for (int trial = 0; trial < 80; ++trial) {
    GenSpec spec;
    spec.kind = GenKind::kRanked;
    spec.m = 1 + static_cast<int>(rng() % 3);
    spec.n = spec.m + static_cast<int>(rng() % (7 - spec.m));
    spec.seed = rng();
    spec.capacity_mode = trial % 2 ? CapacityMode::kRandom : CapacityMode::kNone;
    const Instance in = Generate(spec);
    for (bool complete : {false, true}) {
      const SolverReport a = OracleLeximin(in, complete, true);
      const SolverReport b = OracleLeximinGeneral(in, complete, true);
      EXPECT_EQ(a.leximin.values(), b.leximin.values());
    }
  }
}

TEST(OracleTest, MatchesBruteForceOnGeneralInstances) {
  std::mt19937_64 rng(707);
  for (int trial = 0; trial < 80; ++trial) {
    GenSpec spec;
    spec.kind = trial % 2 ? GenKind::kStrict : GenKind::kWeak;
    spec.m = 1 + static_cast<int>(rng() % 3);
    spec.n = std::max(2, spec.m + static_cast<int>(rng() % (6 - spec.m)));
    spec.seed = rng();
    spec.capacity_mode = CapacityMode::kRandom;
    const Instance in = Generate(spec);
    for (bool complete : {false, true}) {
      const auto best = testing::NaiveLeximin(in, complete, true);
      if (!best) {
        EXPECT_THROW(OracleLeximin(in, complete, true), Error);
        continue;
      }
      const SolverReport r = OracleLeximin(in, complete, true);
      EXPECT_EQ(testing::ToTuple(r.leximin.values()), best->values);
      EXPECT_TRUE(IsStable(in, r.matching));
      EXPECT_TRUE(r.matching.RespectsCapacities(in));
      if (complete) {
        EXPECT_TRUE(r.matching.IsComplete());
      }
    }
  }
}

}  // namespace
}  // namespace lexmatch
