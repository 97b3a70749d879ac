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


#ifndef LEXMATCH_BENCH_H_
#define LEXMATCH_BENCH_H_

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "lexmatch/dispatch.h"

namespace lexmatch {

struct BenchRecord {
  std::string algorithm;
  int n = 0;
  int m = 0;
  std::uint64_t seed = 0;
  double wall_ms = 0;
  std::int64_t steps = 0;
  std::int64_t candidates = 0;
};

struct BenchSpec {
  std::vector<Algo> algos;
  std::vector<int> sizes;
  // Colleges per instance; fast-const always uses 2.
  int m = 10;
  int repeats = 1;
  std::uint64_t seed = 1;
};

// Runs every algorithm on a generated instance of the matching kind for
// each size and repeat. Repeat r uses seed + r, so counters are
// reproducible. Records are ordered by (algorithm, n, seed).
std::vector<BenchRecord> RunBench(const BenchSpec& spec);

// One record per (algorithm, n, m) in first-seen order, holding the median
// steps, wall time and candidates over its repeats. The seed is the first
// repeat's.
std::vector<BenchRecord> MedianBySize(const std::vector<BenchRecord>& records);

void WriteCsv(std::ostream& os, const std::vector<BenchRecord>& records);

// Least-squares slope of log(y) against log(x).
double LogLogSlope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace lexmatch

#endif  // LEXMATCH_BENCH_H_
