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


#include <benchmark/benchmark.h>

#include "lexmatch/fast.h"
#include "lexmatch/fast_const.h"
#include "lexmatch/fast_gen.h"
#include "lexmatch/generate.h"
#include "lexmatch/oracle.h"

namespace lexmatch {
namespace {

Instance Make(GenKind kind, int n, int m) {
  GenSpec spec;
  spec.kind = kind;
  spec.n = n;
  spec.m = m;
  spec.seed = 42;
  return Generate(spec);
}

void BM_Fast(benchmark::State& state) {
  const Instance in = Make(GenKind::kRankedIsometric, state.range(0), state.range(1));
  std::int64_t steps = 0;
  for (auto _ : state) {
    SolverReport r = Fast(in);
    steps = r.steps;
    benchmark::DoNotOptimize(r);
  }
  state.counters["steps"] = static_cast<double>(steps);
  state.SetComplexityN(state.range(0) * state.range(1));
}
BENCHMARK(BM_Fast)
    ->ArgsProduct({{100, 200, 400, 800, 1600, 3200}, {10}})
    ->Complexity(benchmark::oN);

void BM_FastGen(benchmark::State& state) {
  const Instance in = Make(GenKind::kRanked, state.range(0), state.range(1));
  std::int64_t steps = 0;
  for (auto _ : state) {
    SolverReport r = FastGen(in);
    steps = r.steps;
    benchmark::DoNotOptimize(r);
  }
  state.counters["steps"] = static_cast<double>(steps);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FastGen)
    ->ArgsProduct({{50, 100, 200, 400}, {5}})
    ->Complexity(benchmark::oNSquared);

void BM_FastGenGreedy(benchmark::State& state) {
  const Instance in = Make(GenKind::kRanked, state.range(0), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(FastGenGreedy(in));
}
BENCHMARK(BM_FastGenGreedy)->ArgsProduct({{50, 100, 200}, {5}});

void BM_FastConst(benchmark::State& state) {
  const Instance in = Make(GenKind::kStrict, state.range(0), 2);
  std::int64_t steps = 0;
  for (auto _ : state) {
    SolverReport r = FastConst(in);
    steps = r.steps;
    benchmark::DoNotOptimize(r);
  }
  state.counters["steps"] = static_cast<double>(steps);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FastConst)
    ->RangeMultiplier(2)
    ->Range(32, 512)
    ->Complexity(benchmark::oNSquared);

void BM_OracleRanked(benchmark::State& state) {
  const Instance in = Make(GenKind::kRanked, state.range(0), 3);
  for (auto _ : state) benchmark::DoNotOptimize(OracleLeximin(in, true, true));
}
BENCHMARK(BM_OracleRanked)->DenseRange(6, 12, 3);

}  // namespace
}  // namespace lexmatch

BENCHMARK_MAIN();
