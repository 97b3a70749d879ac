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

#include <map>
#include <utility>
#include <vector>

#include "lexmatch/classify.h"
#include "lexmatch/error.h"

namespace lexmatch {
namespace {

// Walks the boundary vector from the student-optimal matching towards the
// leximin optimum. `down` is the college being filled; the candidate is the
// last student of c_{down-1} and the donor is the nearest college above
// `down` holding more than one student, so the shift is always an aligned
// Demote chain.
class FastEngine {
 public:
  FastEngine(const Instance& instance, const FastObserver& observer)
      : in_(instance), observer_(observer) {}

  BoundaryVector Run(BoundaryVector k, int down) {
    Load(k);
    while (down >= 1) {
      const int i = start_[down] - 1;
      if (i < down) break;
      ++steps_;
      int up = down - 1;
      while (up >= 0 && k_[up] <= 1) --up;
      if (up < 0) break;
      const Value& vd = cv_[down];
      if (!(vd < in_.u(i, down - 1)) || k_[down] >= in_.capacity(down)) {
        --down;
      } else if (vd < in_.u(i, down)) {
        Shift(up, down);
      } else if (in_.u(i, down) < vd) {
        --down;
      } else {
        return ResolveTie(up, down);
      }
    }
    return k_;
  }

  std::int64_t steps() const { return steps_; }
  void AddSteps(std::int64_t s) { steps_ += s; }

 private:
  void Load(const BoundaryVector& k) {
    k_ = k;
    const int m = in_.m();
    start_.assign(m + 1, 0);
    cv_.assign(m, Value());
    for (int j = 0; j < m; ++j) {
      start_[j + 1] = start_[j] + k_[j];
      for (int s = start_[j]; s < start_[j + 1]; ++s) cv_[j] += in_.v(j, s);
    }
    steps_ += in_.n() + m;
    if (observer_) observer_(k_);
  }

  void Shift(int up, int down) {
    for (int p = down; p > up; --p) {
      const int s = start_[p] - 1;
      cv_[p] += in_.v(p, s);
      cv_[p - 1] -= in_.v(p - 1, s);
      --start_[p];
      ++steps_;
    }
    --k_[up];
    ++k_[down];
    if (observer_) observer_(k_);
  }

  std::vector<Value> Values(const BoundaryVector& k) {
    steps_ += in_.n() + in_.m();
    return ComputeLeximinTuple(in_, ContiguousMatching(in_.n(), k)).values();
  }

  // u(i, down) == v_down(mu): resolve both continuations and keep the better.
  BoundaryVector ResolveTie(int up, int down) {
    std::vector<int> key(k_.begin(), k_.begin() + down + 1);
    key.push_back(down);
    BoundaryVector current = k_;
    if (auto it = memo_.find(key); it != memo_.end()) {
      std::copy(it->second.begin(), it->second.end(), current.begin());
      return current;
    }
    BoundaryVector a = Run(ShiftBoundary(current, up, down), down);
    BoundaryVector b = Run(current, down - 1);
    BoundaryVector best =
        CompareValueLists(Values(a), Values(b)) == Order::kGreater ? a : b;
    memo_.emplace(std::move(key),
                  std::vector<int>(best.begin(), best.begin() + down + 1));
    return best;
  }

  const Instance& in_;
  const FastObserver& observer_;
  BoundaryVector k_;
  std::vector<int> start_;
  std::vector<Value> cv_;
  std::map<std::vector<int>, std::vector<int>> memo_;
  std::int64_t steps_ = 0;
};

SolverReport Solve(const Instance& instance, const FastObserver& observer,
                   const char* name) {
  if (instance.n() < instance.m()) {
    throw Error(ErrorCode::kInfeasible, "n < m: no complete matching exists");
  }
  if (!IsFastAdmissible(instance)) {
    throw Error(ErrorCode::kNotAdmissible,
                "FaSt needs ranked isometric (or dominated ranked) valuations");
  }
  auto start = StudentOptimalBoundary(instance.n(), instance.capacities());
  if (!start) {
    throw Error(ErrorCode::kInfeasible, "capacities cannot hold all students");
  }
  FastEngine engine(instance, observer);
  SolverReport report;
  report.algorithm = name;
  report.boundary = engine.Run(*start, instance.m() - 1);
  report.matching = ContiguousMatching(instance.n(), report.boundary);
  report.leximin = ComputeLeximinTuple(instance, report.matching);
  engine.AddSteps(instance.n() + instance.m());
  report.steps = engine.steps();
  return report;
}

}  // namespace

SolverReport Fast(const Instance& instance, const FastObserver& observer) {
  if (!instance.HasNonBindingCapacities()) {
    throw Error(ErrorCode::kNotAdmissible,
                "capacities bind (some b_j < n - m + 1); use CapFast");
  }
  return Solve(instance, observer, "fast");
}

SolverReport CapFast(const Instance& instance, const FastObserver& observer) {
  return Solve(instance, observer, "cap-fast");
}

}  // namespace lexmatch
