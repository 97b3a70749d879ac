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


#include "lexmatch/fast.h"

#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "lexmatch/error.h"
#include "lexmatch/generate.h"
#include "lexmatch/ranked.h"
#include "lexmatch/stability.h"
#include "testing/naive.h"

namespace lexmatch {
namespace {

using testing::Example4x2;

Instance RandomRankedIsometric(std::mt19937_64& rng, int max_n, int max_m,
                               CapacityMode caps) {
  GenSpec spec;
  spec.kind = GenKind::kRankedIsometric;
  spec.m = 1 + static_cast<int>(rng() % max_m);
  spec.n = spec.m + static_cast<int>(rng() % (max_n - spec.m + 1));
  spec.seed = rng();
  spec.capacity_mode = caps;
  // Narrow value ranges make ties between V_ij and v_j(mu) common.
  if (rng() % 2) spec.hi = static_cast<std::int64_t>(spec.n) * spec.m + rng() % 3;
  return Generate(spec);
}

TEST(FastTest, Example4x2) {
  const SolverReport r = Fast(Example4x2());
  EXPECT_EQ(r.algorithm, "fast");
  EXPECT_EQ(r.matching.assignment(), (std::vector<int>{0, 1, 1, 1}));
  EXPECT_EQ(r.boundary, (BoundaryVector{1, 3}));
  EXPECT_EQ(testing::ToTuple(r.leximin.values()),
            (testing::Tuple{3, 4, 9, 16, 100, 100}));
  EXPECT_GT(r.steps, 0);
}

TEST(FastTest, SquareGivesIdentity) {
  const Instance in =
      Instance::Isometric({{9, 8, 7}, {6, 5, 4}, {3, 2, 1}}, {3, 3, 3});
  EXPECT_EQ(Fast(in).matching.assignment(), (std::vector<int>{0, 1, 2}));
}

TEST(FastTest, ThreeByTwo) {
  const Instance in = Instance::Isometric({{10, 5}, {9, 4}, {8, 3}}, {3, 3});
  const auto best = testing::NaiveLeximin(in, true, true);
  ASSERT_TRUE(best.has_value());
  const SolverReport r = Fast(in);
  EXPECT_EQ(testing::ToTuple(r.leximin.values()), best->values);
  EXPECT_EQ(r.boundary, (BoundaryVector{1, 2}));
}

TEST(FastTest, Errors) {
  const Instance narrow = Instance::Isometric({{3, 2}}, {1, 1});
  try {
    Fast(narrow);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInfeasible);
  }
  const Instance general({{10, 1}, {9, 0}}, {{5, 4}, {3, 2}}, {2, 2});
  try {
    Fast(general);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotAdmissible);
  }
  EXPECT_THROW(Fast(Example4x2({1, 3})), Error);
}

TEST(FastTest, RelaxedAdmissibility) {
  // v >= u everywhere and u columns non-increasing, not isometric.
  const Instance in({{10, 5}, {9, 4}, {8, 3}, {7, 1}},
                    {{12, 11, 9, 8}, {7, 6, 5, 4}}, {4, 4});
  const auto best = testing::NaiveLeximin(in, true, true);
  EXPECT_EQ(testing::ToTuple(Fast(in).leximin.values()), best->values);
}

TEST(FastTest, MatchesBruteForce) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 150; ++trial) {
    const Instance in = RandomRankedIsometric(rng, 7, 3, CapacityMode::kNone);
    const auto best = testing::NaiveLeximin(in, true, true);
    ASSERT_TRUE(best.has_value());
    const SolverReport r = Fast(in);
    ASSERT_EQ(testing::ToTuple(r.leximin.values()), best->values)
        << "trial " << trial;
    EXPECT_TRUE(IsStable(in, r.matching));
    EXPECT_TRUE(r.matching.IsComplete());
  }
}

TEST(FastTest, ObserverSeesContiguousCompleteStates) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Instance in = RandomRankedIsometric(rng, 9, 4, CapacityMode::kNone);
    int states = 0;
    Fast(in, [&](const BoundaryVector& k) {
      ++states;
      int sum = 0;
      for (int x : k) {
        EXPECT_GE(x, 1);
        sum += x;
      }
      EXPECT_EQ(sum, in.n());
      EXPECT_TRUE(IsStable(in, ContiguousMatching(in.n(), k)));
    });
    EXPECT_GE(states, 1);
  }
}

TEST(CapFastTest, ForcedByCapacities) {
  const SolverReport r = CapFast(Example4x2({1, 3}));
  EXPECT_EQ(r.algorithm, "cap-fast");
  EXPECT_EQ(r.matching.assignment(), (std::vector<int>{0, 1, 1, 1}));
}

TEST(CapFastTest, InfeasibleCapacities) {
  try {
    CapFast(Example4x2({1, 2}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInfeasible);
  }
}

TEST(CapFastTest, EqualsFastWhenCapacitiesDoNotBind) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Instance in = RandomRankedIsometric(rng, 10, 4, CapacityMode::kNone);
    std::vector<int> caps(in.m(), std::max(1, in.n() - 1));
    if (in.m() == 1) caps[0] = in.n();
    const Instance capped = in.WithCapacities(caps);
    EXPECT_EQ(CapFast(capped).leximin.values(), Fast(capped).leximin.values());
  }
}

TEST(CapFastTest, MatchesCapacityRespectingBruteForce) {
  std::mt19937_64 rng(13);
  int binding = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const Instance in = RandomRankedIsometric(rng, 7, 3, CapacityMode::kRandom);
    binding += !in.HasNonBindingCapacities();
    const auto best = testing::NaiveLeximin(in, true, true);
    if (!best) {
      EXPECT_THROW(CapFast(in), Error);
      continue;
    }
    const SolverReport r = CapFast(in);
    ASSERT_EQ(testing::ToTuple(r.leximin.values()), best->values)
        << "trial " << trial;
    EXPECT_TRUE(r.matching.RespectsCapacities(in));
  }
  EXPECT_GT(binding, 30);
}

TEST(CapFastTest, FiveByThree) {
  GenSpec spec;
  spec.kind = GenKind::kRankedIsometric;
  spec.n = 5;
  spec.m = 3;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    spec.seed = seed;
    const Instance in = Generate(spec).WithCapacities({2, 2, 2});
    EXPECT_EQ(testing::ToTuple(CapFast(in).leximin.values()),
              testing::NaiveLeximin(in, true, true)->values);
  }
}

}  // namespace
}  // namespace lexmatch
