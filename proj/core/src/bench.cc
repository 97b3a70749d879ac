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

#include <algorithm>
#include <chrono>
#include <cmath>

#include "lexmatch/error.h"
#include "lexmatch/generate.h"

namespace lexmatch {
namespace {

GenSpec SpecFor(Algo algo, int n, int m, std::uint64_t seed) {
  GenSpec g;
  g.n = n;
  g.m = m;
  g.seed = seed;
  switch (algo) {
    case Algo::kFast:
    case Algo::kCapFast:
      g.kind = GenKind::kRankedIsometric;
      break;
    case Algo::kFastConst:
      g.kind = GenKind::kStrict;
      g.m = 2;
      break;
    default:
      g.kind = GenKind::kRanked;
      break;
  }
  if (algo == Algo::kCapFast || algo == Algo::kCapFastGen ||
      algo == Algo::kCapFastGenGreedy) {
    g.capacity_mode = CapacityMode::kRandom;
  }
  return g;
}

}  // namespace

std::vector<BenchRecord> RunBench(const BenchSpec& spec) {
  std::vector<BenchRecord> out;
  for (Algo algo : spec.algos) {
    for (int n : spec.sizes) {
      for (int r = 0; r < spec.repeats; ++r) {
        const std::uint64_t seed = spec.seed + r;
        const Instance instance = Generate(SpecFor(algo, n, spec.m, seed));
        const auto start = std::chrono::steady_clock::now();
        const SolverReport report = Solve(instance, algo);
        const auto stop = std::chrono::steady_clock::now();
        BenchRecord rec;
        rec.algorithm = report.algorithm;
        rec.n = instance.n();
        rec.m = instance.m();
        rec.seed = seed;
        rec.wall_ms =
            std::chrono::duration<double, std::milli>(stop - start).count();
        rec.steps = report.steps;
        rec.candidates = report.candidates;
        out.push_back(rec);
      }
    }
  }
  return out;
}

std::vector<BenchRecord> MedianBySize(const std::vector<BenchRecord>& records) {
  std::vector<std::vector<BenchRecord>> groups;
  for (const BenchRecord& r : records) {
    auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) {
      return g[0].algorithm == r.algorithm && g[0].n == r.n && g[0].m == r.m;
    });
    if (it == groups.end()) {
      groups.push_back({r});
    } else {
      it->push_back(r);
    }
  }
  auto median = [](std::vector<double> xs) {
    std::sort(xs.begin(), xs.end());
    const std::size_t h = xs.size() / 2;
    return xs.size() % 2 == 1 ? xs[h] : (xs[h - 1] + xs[h]) / 2;
  };
  std::vector<BenchRecord> out;
  for (const auto& g : groups) {
    std::vector<double> steps, wall, cand;
    for (const BenchRecord& r : g) {
      steps.push_back(static_cast<double>(r.steps));
      wall.push_back(r.wall_ms);
      cand.push_back(static_cast<double>(r.candidates));
    }
    BenchRecord rec = g[0];
    rec.steps = static_cast<std::int64_t>(std::llround(median(steps)));
    rec.wall_ms = median(wall);
    rec.candidates = static_cast<std::int64_t>(std::llround(median(cand)));
    out.push_back(rec);
  }
  return out;
}

void WriteCsv(std::ostream& os, const std::vector<BenchRecord>& records) {
  os << "algorithm,n,m,seed,wall_ms,steps,candidates\n";
  for (const BenchRecord& r : records) {
    os << r.algorithm << ',' << r.n << ',' << r.m << ',' << r.seed << ','
       << r.wall_ms << ',' << r.steps << ',' << r.candidates << '\n';
  }
}

double LogLogSlope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw Error(ErrorCode::kInvalidInput, "slope needs two or more points");
  }
  const double k = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t t = 0; t < x.size(); ++t) {
    const double lx = std::log(x[t]);
    const double ly = std::log(y[t]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

}  // namespace lexmatch
