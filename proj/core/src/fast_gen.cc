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

#include "lexmatch/fast_gen.h"

#include <algorithm>
#include <utility>
#include <vector>

#include "lexmatch/classify.h"
#include "lexmatch/error.h"

namespace lexmatch {
namespace {

// True iff sorted(a + block + {college}) > b, decided lazily.
bool MergedGreater(const std::vector<Value>& a, const std::vector<Value>& block,
                   const Value& college, const std::vector<Value>& b) {
  size_t ia = 0;
  size_t ib = 0;
  bool college_used = false;
  for (const Value& rhs : b) {
    const Value* pick = nullptr;
    int source = -1;
    if (ia < a.size()) {
      pick = &a[ia];
      source = 0;
    }
    if (ib < block.size() && (pick == nullptr || block[ib] < *pick)) {
      pick = &block[ib];
      source = 1;
    }
    if (!college_used && (pick == nullptr || college < *pick)) {
      pick = &college;
      source = 2;
    }
    if (*pick < rhs) return false;
    if (rhs < *pick) return true;
    if (source == 0) {
      ++ia;
    } else if (source == 1) {
      ++ib;
    } else {
      college_used = true;
    }
  }
  return false;
}

std::vector<Value> Merge(const std::vector<Value>& a,
                         const std::vector<Value>& block,
                         const Value& college) {
  std::vector<Value> out;
  out.reserve(a.size() + block.size() + 1);
  std::merge(a.begin(), a.end(), block.begin(), block.end(),
             std::back_inserter(out));
  out.insert(std::upper_bound(out.begin(), out.end(), college), college);
  return out;
}

SolverReport SolveDp(const Instance& in, const char* name) {
  if (!Classify(in).ranked) {
    throw Error(ErrorCode::kNotRanked, "instance is not ranked");
  }
  const int n = in.n();
  const int m = in.m();
  if (n < m) {
    throw Error(ErrorCode::kInfeasible, "n < m: no complete matching exists");
  }
  if (!StudentOptimalBoundary(n, in.capacities())) {
    throw Error(ErrorCode::kInfeasible, "capacities cannot hold all students");
  }
  std::int64_t steps = n + m;
  std::vector<std::vector<Value>> best(n + 1);
  std::vector<std::vector<Value>> next(n + 1);
  std::vector<char> valid(n + 1, 0);
  std::vector<char> next_valid(n + 1, 0);
  std::vector<std::vector<int>> parent(m, std::vector<int>(n + 1, -1));
  valid[0] = 1;
  std::vector<Value> block;
  for (int j = 0; j < m; ++j) {
    std::fill(next_valid.begin(), next_valid.end(), 0);
    const int last = n - (m - 1 - j);
    for (int w2 = j + 1; w2 <= last; ++w2) {
      block.clear();
      Value college;
      const int lowest = std::max(j, w2 - in.capacity(j));
      for (int w = w2 - 1; w >= lowest; --w) {
        const Value& x = in.u(w, j);
        block.insert(std::upper_bound(block.begin(), block.end(), x), x);
        college += in.v(j, w);
        if (!valid[w]) continue;
        ++steps;
        if (!next_valid[w2] || MergedGreater(best[w], block, college, next[w2])) {
          next[w2] = Merge(best[w], block, college);
          next_valid[w2] = 1;
          parent[j][w2] = w;
        }
      }
    }
    std::swap(best, next);
    std::swap(valid, next_valid);
  }
  if (!valid[n]) {
    throw Error(ErrorCode::kInfeasible, "no capacity-feasible boundary");
  }
  BoundaryVector k(m);
  for (int j = m - 1, w = n; j >= 0; --j) {
    const int p = parent[j][w];
    k[j] = w - p;
    w = p;
  }
  SolverReport report;
  report.algorithm = name;
  report.boundary = k;
  report.matching = ContiguousMatching(n, k);
  report.leximin = ComputeLeximinTuple(in, report.matching);
  report.steps = steps + n + m;
  return report;
}

}  // namespace

SolverReport FastGen(const Instance& instance) {
  if (!instance.HasNonBindingCapacities()) {
    throw Error(ErrorCode::kNotAdmissible,
                "capacities bind (some b_j < n - m + 1); use CapFastGen");
  }
  return SolveDp(instance, "fast-gen");
}

SolverReport CapFastGen(const Instance& instance) {
  return SolveDp(instance, "cap-fast-gen");
}

}  // namespace lexmatch
