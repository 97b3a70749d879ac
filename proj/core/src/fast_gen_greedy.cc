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

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "lexmatch/classify.h"
#include "lexmatch/error.h"
#include "lexmatch/fast_gen.h"

namespace lexmatch {

std::optional<Agent> SourceDec(const Instance& instance,
                               const Matching& mu_new,
                               const Matching& mu_old) {
  const AgentValues nv = ComputeAgentValues(instance, mu_new);
  const AgentValues ov = ComputeAgentValues(instance, mu_old);
  const LeximinTuple a(nv.students, nv.colleges);
  const LeximinTuple b(ov.students, ov.colleges);
  auto old_value = [&](const Agent& x) -> const Value& {
    return x.is_student() ? ov.students[x.index] : ov.colleges[x.index];
  };
  for (int t = 0; t < a.size(); ++t) {
    if (b[t] < a[t]) return std::nullopt;
    if (!(a[t] < b[t])) continue;
    const Value& x = a[t];
    for (int s = t; s < a.size() && a[s] == x; ++s) {
      if (old_value(a.agent_at(s)) != x) return a.agent_at(s);
    }
    for (int s = 0; s < a.size() && !(x < a[s]); ++s) {
      if (x < old_value(a.agent_at(s))) return a.agent_at(s);
    }
    return a.agent_at(t);
  }
  return std::nullopt;
}

Preprocessed CapPreprocess(const Instance& instance) {
  const int n = instance.n();
  const int m = instance.m();
  auto k = StudentOptimalBoundary(n, instance.capacities());
  if (!k) {
    throw Error(ErrorCode::kInfeasible,
                "no complete capacity-feasible matching exists");
  }
  Preprocessed out;
  out.boundary = *k;
  out.fix.upper = {0};
  out.fix.lower = {m - 1};
  const Matching mu = ContiguousMatching(n, *k);
  const AgentValues values = ComputeAgentValues(instance, mu);
  for (int i = 1; i + 1 < n; ++i) {
    const int c = mu.college_of(i);
    if ((*k)[c] != 1) continue;
    bool envies = false;
    for (const Value& cv : values.colleges) {
      if (cv < values.students[i]) {
        envies = true;
        break;
      }
    }
    if (envies) continue;
    for (int j = c; j < m; ++j) {
      out.fix.upper.insert(j);
      out.fix.lower.insert(j);
    }
    break;
  }
  return out;
}

namespace {

class GreedyWalk {
 public:
  GreedyWalk(const Instance& instance, BoundaryVector k)
      : in_(instance), k_(std::move(k)) {}

  std::int64_t steps() const { return steps_; }
  const BoundaryVector& boundary() const { return k_; }

  // One pass of the fix-set loop. Returns the per-college flags of full
  // colleges that gave a student away.
  std::vector<char> Pass(FixSets fix) {
    const int m = in_.m();
    fix_ = std::move(fix);
    std::vector<char> gave(m, 0);
    std::set<BoundaryVector> visited = {k_};
    const std::int64_t limit =
        16LL * (m + 1) * (m + 1) * (in_.n() + 1) + 64;
    for (std::int64_t iter = 0;
         static_cast<int>(fix_.lower.size()) < m && iter < limit; ++iter) {
      ++steps_;
      int up = 0;
      while (fix_.lower.count(up)) ++up;
      std::erase_if(fix_.soft, [&](const std::pair<int, int>& p) {
        return p.second <= up && up < p.first;
      });
      const int down = WeakestUnfixed(k_, up);
      if (down < 0 || k_[up] == 1 ||
          !(CollegeValue(k_, down) < CollegeValue(k_, up))) {
        fix_.lower.insert(up);
        continue;
      }
      if (k_[down] >= in_.capacity(down)) {
        fix_.upper.insert(down);
        continue;
      }
      BoundaryVector shifted = ShiftBoundary(k_, up, down);
      const Order order = CompareValueLists(Values(shifted), Values(k_));
      if (order != Order::kLess && !visited.count(shifted)) {
        if (k_[up] == in_.capacity(up)) gave[up] = 1;
        k_ = std::move(shifted);
        visited.insert(k_);
        continue;
      }
      std::optional<Agent> culprit;
      if (order == Order::kLess) culprit = Blame(shifted, k_);
      if (!culprit || *culprit == Agent::College(up)) {
        FixBelow(up);
      } else if (culprit->is_student()) {
        const int t = CollegeOf(k_, culprit->index);
        fix_.lower.insert(t);
        if (t + 1 < m) {
          fix_.upper.insert(t + 1);
          for (int j = t + 2; j < m; ++j) {
            if (IsUnfixed(j)) fix_.soft.insert({j, t + 1});
          }
        }
      } else {
        LookAhead(down, visited);
      }
    }
    return gave;
  }

 private:
  void FixBelow(int up) {
    fix_.lower.insert(up);
    if (up + 1 < in_.m()) fix_.upper.insert(up + 1);
  }

  // Shadow walk that keeps shifting into `down` until the tuple recovers.
  void LookAhead(int down, std::set<BoundaryVector>& visited) {
    const int m = in_.m();
    BoundaryVector kk = k_;
    std::set<int> lf = fix_.lower;
    std::set<int> uf = fix_.upper;
    const std::vector<Value> base = Values(k_);
    while (static_cast<int>(lf.size()) < m && kk[down] < in_.capacity(down)) {
      ++steps_;
      int up = 0;
      while (lf.count(up)) ++up;
      if (up >= down) break;
      if (kk[up] == 1 || !(CollegeValue(kk, down) < CollegeValue(kk, up))) {
        lf.insert(up);
        continue;
      }
      kk = ShiftBoundary(kk, up, down);
      const Order order = CompareValueLists(Values(kk), base);
      if (order != Order::kLess && !visited.count(kk)) {
        k_ = kk;
        visited.insert(k_);
        fix_.lower = std::move(lf);
        fix_.upper = std::move(uf);
        return;
      }
      std::optional<Agent> culprit;
      if (order == Order::kLess) culprit = Blame(kk, k_);
      if (!culprit || *culprit == Agent::College(up)) {
        lf.insert(up);
        if (up + 1 < m) uf.insert(up + 1);
      } else if (culprit->is_student()) {
        const int t = CollegeOf(kk, culprit->index);
        if (t == down) {
          fix_.upper.insert(down);
        } else {
          fix_.soft.insert({down, t});
        }
        return;
      }
    }
    fix_.upper.insert(down);
  }

  bool IsUnfixed(int j) const {
    if (fix_.upper.count(j)) return false;
    for (const auto& [a, b] : fix_.soft) {
      if (a == j) return false;
    }
    return true;
  }

  int WeakestUnfixed(const BoundaryVector& k, int up) {
    int best = -1;
    Value best_value;
    for (int j = up + 1; j < in_.m(); ++j) {
      if (!IsUnfixed(j)) continue;
      Value v = CollegeValue(k, j);
      if (best < 0 || v < best_value) {
        best = j;
        best_value = std::move(v);
      }
    }
    return best;
  }

  Value CollegeValue(const BoundaryVector& k, int j) {
    int start = 0;
    for (int t = 0; t < j; ++t) start += k[t];
    Value sum;
    for (int s = start; s < start + k[j]; ++s) sum += in_.v(j, s);
    steps_ += k[j];
    return sum;
  }

  static int CollegeOf(const BoundaryVector& k, int student) {
    int w = 0;
    for (int j = 0; j < static_cast<int>(k.size()); ++j) {
      w += k[j];
      if (student < w) return j;
    }
    return -1;
  }

  std::vector<Value> Values(const BoundaryVector& k) {
    steps_ += in_.n() + in_.m();
    return ComputeLeximinTuple(in_, ContiguousMatching(in_.n(), k)).values();
  }

  std::optional<Agent> Blame(const BoundaryVector& now,
                             const BoundaryVector& before) {
    steps_ += 2 * (in_.n() + in_.m());
    return SourceDec(in_, ContiguousMatching(in_.n(), now),
                     ContiguousMatching(in_.n(), before));
  }

  const Instance& in_;
  BoundaryVector k_;
  FixSets fix_;
  std::int64_t steps_ = 0;
};

SolverReport RunGreedy(const Instance& in, bool capped, const char* name) {
  if (!Classify(in).ranked) {
    throw Error(ErrorCode::kNotRanked, "instance is not ranked");
  }
  if (in.n() < in.m()) {
    throw Error(ErrorCode::kInfeasible, "n < m: no complete matching exists");
  }
  Preprocessed pre = CapPreprocess(in);
  if (!capped) {
    pre.fix = FixSets{{0}, {in.m() - 1}, {}};
  }
  GreedyWalk walk(in, pre.boundary);
  FixSets fix = pre.fix;
  std::int64_t reruns = 0;
  const std::int64_t max_reruns = static_cast<std::int64_t>(in.m()) * in.n() + 1;
  while (true) {
    const std::vector<char> gave = walk.Pass(fix);
    const auto flagged = std::find(gave.begin(), gave.end(), 1);
    if (!capped || flagged == gave.end() || reruns >= max_reruns) break;
    ++reruns;
    const int j = static_cast<int>(flagged - gave.begin());
    fix = FixSets{};
    for (int t = 0; t < j; ++t) fix.upper.insert(t);
    fix.lower.insert(in.m() - 1);
  }
  SolverReport report;
  report.algorithm = name;
  report.boundary = walk.boundary();
  report.matching = ContiguousMatching(in.n(), report.boundary);
  report.leximin = ComputeLeximinTuple(in, report.matching);
  report.steps = walk.steps() + 2 * (in.n() + in.m());
  report.reruns = reruns;
  return report;
}

}  // namespace

SolverReport FastGenGreedy(const Instance& instance) {
  if (!instance.HasNonBindingCapacities()) {
    throw Error(ErrorCode::kNotAdmissible,
                "capacities bind (some b_j < n - m + 1); use CapFastGenGreedy");
  }
  return RunGreedy(instance, false, "fast-gen-greedy");
}

SolverReport CapFastGenGreedy(const Instance& instance) {
  return RunGreedy(instance, true, "cap-fast-gen-greedy");
}

}  // namespace lexmatch
