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


#include "lexmatch/dispatch.h"

#include <string>

#include "gtest/gtest.h"
#include "lexmatch/classify.h"
#include "lexmatch/error.h"
#include "lexmatch/generate.h"
#include "lexmatch/leximin.h"
#include "lexmatch/stability.h"
#include "testing/naive.h"

namespace lexmatch {
namespace {

ErrorCode RouteError(const Instance& in, Algo algo = Algo::kAuto) {
  try {
    Route(in, algo);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "routed";
  return ErrorCode::kPrecondition;
}

TEST(DispatchTest, Names) {
  for (Algo a : {Algo::kAuto, Algo::kFast, Algo::kCapFast, Algo::kFastGen,
                 Algo::kCapFastGen, Algo::kFastGenGreedy,
                 Algo::kCapFastGenGreedy, Algo::kFastConst, Algo::kOracle}) {
    EXPECT_EQ(ParseAlgo(AlgoName(a)), a);
  }
  EXPECT_EQ(AlgoName(Algo::kCapFastGen), "cap-fast-gen");
  EXPECT_THROW(ParseAlgo("fastest"), Error);
}

TEST(DispatchTest, ExampleSelectsFast) {
  EXPECT_EQ(Route(testing::Example4x2(), Algo::kAuto), Algo::kFast);
  EXPECT_EQ(Route(testing::Example4x2({1, 3}), Algo::kAuto), Algo::kCapFast);
  EXPECT_EQ(Route(testing::Example4x2({1, 3}), Algo::kFast), Algo::kCapFast);
  EXPECT_EQ(Route(testing::Example4x2({3, 3}), Algo::kAuto), Algo::kFast);
  const SolverReport r = Solve(testing::Example4x2(), Algo::kAuto);
  EXPECT_EQ(r.matching.assignment(), (std::vector<int>{0, 1, 1, 1}));
}

TEST(DispatchTest, RankedSelectsFastGen) {
  const Instance in({{5, 1}, {4, 2}, {3, 1}}, {{3, 2, 1}, {9, 8, 7}}, {3, 3});
  ASSERT_TRUE(Classify(in).ranked);
  ASSERT_FALSE(Classify(in).isometric);
  EXPECT_EQ(Route(in, Algo::kAuto), Algo::kFastGen);
  EXPECT_EQ(Route(in.WithCapacities({1, 2}), Algo::kAuto), Algo::kCapFastGen);
  EXPECT_EQ(Route(in.WithCapacities({1, 2}), Algo::kFastGenGreedy),
            Algo::kCapFastGenGreedy);
}

TEST(DispatchTest, StrictTwoCollegesSelectsFastConst) {
  const Instance in({{1, 5}, {4, 2}, {3, 1}}, {{1, 3, 2}, {2, 1, 3}}, {3, 3});
  ASSERT_FALSE(Classify(in).ranked);
  EXPECT_EQ(Route(in, Algo::kAuto), Algo::kFastConst);
  EXPECT_EQ(RouteError(in.WithCapacities({2, 2})), ErrorCode::kNotAdmissible);
}

TEST(DispatchTest, WeakRankedIsometricIsNpHard) {
  const Instance in = Instance::Isometric({{4, 3}, {4, 3}, {2, 1}}, {3, 3});
  ASSERT_TRUE(Classify(in).weakly_ranked);
  EXPECT_EQ(RouteError(in), ErrorCode::kNpHardRegime);
  EXPECT_EQ(Route(in, Algo::kOracle), Algo::kOracle);
  EXPECT_NO_THROW(Solve(in, Algo::kOracle));
}

TEST(DispatchTest, StrictManyCollegesIsNpHard) {
  const Instance in({{1, 5, 2}, {4, 2, 3}, {3, 1, 2}},
                    {{1, 3, 2}, {2, 1, 3}, {3, 2, 1}}, {3, 3, 3});
  EXPECT_EQ(RouteError(in), ErrorCode::kNpHardRegime);
}

TEST(DispatchTest, AutoNeverFailsSolverPreconditions) {
  for (GenKind kind : {GenKind::kRankedIsometric, GenKind::kRanked,
                       GenKind::kStrict, GenKind::kWeak,
                       GenKind::kWeakRankedIsometric}) {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
      for (CapacityMode mode : {CapacityMode::kNone, CapacityMode::kRandom}) {
        const int n = 2 + static_cast<int>(seed % 5);
        const int m = kind == GenKind::kStrict ? 2 : 1 + static_cast<int>(seed % 3);
        const Instance in = Generate({kind, n, std::min(n, m), seed, mode});
        SCOPED_TRACE(std::string(GenKindName(kind)) + " seed " +
                     std::to_string(seed));
        try {
          const SolverReport r = Solve(in, Algo::kAuto);
          EXPECT_TRUE(IsStable(in, r.matching));
          EXPECT_TRUE(r.matching.RespectsCapacities(in));
        } catch (const Error& e) {
          EXPECT_TRUE(e.code() == ErrorCode::kNpHardRegime ||
                      e.code() == ErrorCode::kNotAdmissible ||
                      e.code() == ErrorCode::kInfeasible)
              << ErrorCodeName(e.code()) << ": " << e.what();
        }
      }
    }
  }
}

TEST(DispatchTest, OracleOptions) {
  SolveOptions o;
  o.require_complete = true;
  o.budget.max_enumerated = 2;
  try {
    Solve(testing::Example4x2(), Algo::kOracle, o);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBudgetExceeded);
  }
}

}  // namespace
}  // namespace lexmatch
