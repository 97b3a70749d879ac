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


#include "lexmatch/bench.h"

#include <cmath>
#include <sstream>
#include <string>

#include "gtest/gtest.h"

namespace lexmatch {
namespace {

std::vector<BenchRecord> RunFor(Algo algo, std::vector<int> sizes, int m,
                                int repeats = 1) {
  BenchSpec spec;
  spec.algos = {algo};
  spec.sizes = std::move(sizes);
  spec.m = m;
  spec.repeats = repeats;
  return RunBench(spec);
}

TEST(BenchTest, FastCounterRatios) {
  const auto r = MedianBySize(RunFor(Algo::kFast, {100, 200, 400}, 10, 11));
  ASSERT_EQ(r.size(), 3u);
  for (int t = 1; t < 3; ++t) {
    const double ratio = static_cast<double>(r[t].steps) / r[t - 1].steps;
    EXPECT_GE(ratio, 1.5) << r[t].n;
    EXPECT_LE(ratio, 2.5) << r[t].n;
  }
}

TEST(BenchTest, FastGenCounterRatio) {
  const auto r = MedianBySize(RunFor(Algo::kFastGen, {50, 100}, 5, 11));
  ASSERT_EQ(r.size(), 2u);
  EXPECT_LE(static_cast<double>(r[1].steps) / r[0].steps, 4.5);
}

TEST(BenchTest, RepeatsAreDeterministic) {
  const auto a = RunFor(Algo::kFastGen, {40}, 4, 3);
  const auto b = RunFor(Algo::kFastGen, {40}, 4, 3);
  ASSERT_EQ(a.size(), 3u);
  for (std::size_t t = 0; t < a.size(); ++t) {
    EXPECT_EQ(a[t].steps, b[t].steps);
    EXPECT_EQ(a[t].seed, b[t].seed);
    EXPECT_EQ(a[t].algorithm, "fast-gen");
  }
  EXPECT_NE(a[0].seed, a[1].seed);
}

TEST(BenchTest, MedianBySize) {
  const std::vector<BenchRecord> in = {{"fast", 10, 2, 1, 1.0, 7, 0},
                                       {"fast", 20, 2, 1, 2.0, 9, 0},
                                       {"fast", 10, 2, 2, 3.0, 3, 0},
                                       {"fast", 10, 2, 3, 2.0, 100, 0}};
  const auto out = MedianBySize(in);
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0].n, 10);
  EXPECT_EQ(out[0].steps, 7);
  EXPECT_EQ(out[0].wall_ms, 2.0);
  EXPECT_EQ(out[0].seed, 1u);
  EXPECT_EQ(out[1].steps, 9);
}

TEST(BenchTest, FastConstUsesTwoColleges) {
  const auto r = RunFor(Algo::kFastConst, {16}, 10);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].m, 2);
  EXPECT_GT(r[0].steps, 0);
}

TEST(BenchTest, Csv) {
  std::ostringstream os;
  WriteCsv(os, {{"fast", 10, 2, 1, 0.5, 42, 0}});
  std::istringstream in(os.str());
  std::string header, row;
  std::getline(in, header);
  std::getline(in, row);
  EXPECT_EQ(header, "algorithm,n,m,seed,wall_ms,steps,candidates");
  EXPECT_EQ(row.substr(0, 12), "fast,10,2,1,");
  EXPECT_NE(row.find(",42,0"), std::string::npos);
}

TEST(BenchTest, LogLogSlope) {
  std::vector<double> x, y;
  for (double v : {10.0, 20.0, 40.0, 80.0}) {
    x.push_back(v);
    y.push_back(3 * v * v);
  }
  EXPECT_NEAR(LogLogSlope(x, y), 2.0, 1e-9);
}

}  // namespace
}  // namespace lexmatch
