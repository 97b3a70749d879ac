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


#include "lexmatch/fast_const.h"

#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "lexmatch/error.h"
#include "lexmatch/generate.h"
#include "lexmatch/stability.h"
#include "testing/naive.h"

namespace lexmatch {
namespace {

using testing::Example4x2;

Instance RandomStrict(std::mt19937_64& rng, int max_n) {
  GenSpec spec;
  spec.kind = GenKind::kStrict;
  spec.m = 2;
  spec.n = 2 + static_cast<int>(rng() % (max_n - 1));
  spec.seed = rng();
  return Generate(spec);
}

TEST(IsStableM2Test, AgreesWithCoreOnEveryMatching) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const Instance in = RandomStrict(rng, 8);
    testing::ForEachAssignment(in.n(), 2, false, [&](const auto& a) {
      const Matching mu(2, a);
      ASSERT_EQ(IsStableM2(in, mu), IsStable(in, mu));
    });
  }
}

TEST(IsStableM2Test, FavouritesAreStable) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    const Instance in = RandomStrict(rng, 8);
    std::vector<int> alpha(in.n());
    for (int i = 0; i < in.n(); ++i) alpha[i] = in.u(i, 0) > in.u(i, 1) ? 0 : 1;
    EXPECT_TRUE(IsStableM2(in, Matching(2, alpha)));
  }
}

TEST(IsStableM2Test, SwapAgainstCollegeOrderIsUnstable) {
  // Both students favour c_1, which prefers s_1; giving c_1 s_2 instead of
  // s_1 breaks stability.
  const Instance in({{5, 1}, {4, 1}}, {{9, 3}, {2, 1}}, {2, 2});
  EXPECT_FALSE(IsStableM2(in, Matching(2, {1, 0})));
  EXPECT_TRUE(IsStableM2(in, Matching(2, {0, 1})));
}

TEST(IsStableM2Test, Preconditions) {
  EXPECT_THROW(IsStableM2(Instance::Isometric({{1}, {2}}, {2}), Matching(1, {0, 0})),
               Error);
  const Instance tie({{1, 1}, {2, 1}}, {{2, 1}, {2, 1}}, {2, 2});
  try {
    IsStableM2(tie, Matching(2, {0, 0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonStrict);
  }
}

TEST(FastConstTest, Example4x2) {
  const SolverReport r = FastConst(Example4x2());
  EXPECT_EQ(r.algorithm, "fast-const");
  EXPECT_EQ(testing::ToTuple(r.leximin.values()),
            (testing::Tuple{3, 4, 9, 16, 100, 100}));
}

TEST(FastConstTest, BalancedFavouritesNeedNoMoves) {
  // Two students favour each college and each college likes its own fans.
  const Instance in({{9, 1}, {8, 2}, {1, 9}, {2, 8}},
                    {{9, 8, 1, 2}, {1, 2, 9, 8}}, {4, 4});
  EXPECT_EQ(FastConst(in).matching.assignment(),
            (std::vector<int>{0, 0, 1, 1}));
}

TEST(FastConstTest, NeedsNonBindingCapacities) {
  try {
    FastConst(Example4x2({3, 3}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotAdmissible);
  }
}

TEST(FastConstTest, MatchesBruteForce) {
  std::mt19937_64 rng(505);
  for (int trial = 0; trial < 300; ++trial) {
    const Instance in = RandomStrict(rng, 8);
    const auto best = testing::NaiveLeximin(in, false, true);
    const SolverReport r = FastConst(in);
    ASSERT_EQ(testing::ToTuple(r.leximin.values()), best->values)
        << "trial " << trial;
    EXPECT_TRUE(IsStable(in, r.matching));
  }
}

}  // namespace
}  // namespace lexmatch
