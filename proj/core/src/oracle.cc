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

#include "lexmatch/oracle.h"

#include <functional>
#include <string>
#include <vector>

#include "lexmatch/classify.h"
#include "lexmatch/error.h"
#include "lexmatch/leximin.h"
#include "lexmatch/ranked.h"
#include "lexmatch/stability.h"

namespace lexmatch {
namespace {

void Refuse(std::uint64_t budget) {
  throw Error(ErrorCode::kBudgetExceeded,
              "search space exceeds budget of " + std::to_string(budget) +
                  " candidates");
}

// Visits capacity- and completeness-feasible assignments in lexicographic
// order of (c_0, c_1, ..., unmatched) per student.
class AssignmentSearch {
 public:
  AssignmentSearch(const Instance& instance, bool complete, bool capacities)
      : in_(instance), complete_(complete), capacities_(capacities),
        assignment_(instance.n(), kUnmatched), load_(instance.m(), 0) {}

  void Run(const std::function<void(const std::vector<int>&)>& leaf) {
    leaf_ = &leaf;
    Recurse(0, in_.m());
  }

 private:
  void Recurse(int i, int empty) {
    if (i == in_.n()) {
      if (!complete_ || empty == 0) (*leaf_)(assignment_);
      return;
    }
    const int left = in_.n() - i;
    for (int j = 0; j < in_.m(); ++j) {
      if (capacities_ && load_[j] >= in_.capacity(j)) continue;
      const int now_empty = empty - (load_[j] == 0 ? 1 : 0);
      if (complete_ && now_empty > left - 1) continue;
      assignment_[i] = j;
      ++load_[j];
      Recurse(i + 1, now_empty);
      --load_[j];
    }
    if (!complete_) {
      assignment_[i] = kUnmatched;
      Recurse(i + 1, empty);
    }
  }

  const Instance& in_;
  bool complete_;
  bool capacities_;
  std::vector<int> assignment_;
  std::vector<int> load_;
  const std::function<void(const std::vector<int>&)>* leaf_ = nullptr;
};

SolverReport Finish(const Instance& instance, const char* what, bool found,
                    std::vector<int> best, std::int64_t candidates) {
  if (!found) {
    throw Error(ErrorCode::kInfeasible,
                std::string("no qualifying stable matching (") + what + ")");
  }
  SolverReport report;
  report.algorithm = "oracle";
  report.matching = Matching(instance.m(), std::move(best));
  report.leximin = ComputeLeximinTuple(instance, report.matching);
  if (auto k = BoundaryFromMatching(instance, report.matching)) {
    report.boundary = *k;
  }
  report.candidates = candidates;
  report.steps = candidates;
  return report;
}

SolverReport RankedOracle(const Instance& instance, bool require_complete,
                          bool respect_capacities, OracleBudget budget) {
  const std::uint64_t bound =
      CountCompositions(instance.n(), instance.m(), require_complete);
  if (bound > budget.max_enumerated) Refuse(budget.max_enumerated);
  bool found = false;
  std::vector<Value> best_values;
  std::vector<int> best;
  std::int64_t candidates = 0;
  ForEachStableMatching(
      instance, require_complete, respect_capacities,
      [&](const BoundaryVector&, const Matching& mu) {
        ++candidates;
        std::vector<Value> values = ComputeLeximinTuple(instance, mu).values();
        if (!found || CompareValueLists(values, best_values) == Order::kGreater) {
          found = true;
          best_values = std::move(values);
          best = mu.assignment();
        }
        return true;
      });
  return Finish(instance, "ranked", found, std::move(best), candidates);
}

}  // namespace

SolverReport OracleLeximinGeneral(const Instance& instance,
                                  bool require_complete,
                                  bool respect_capacities,
                                  OracleBudget budget) {
  AssignmentSearch search(instance, require_complete, respect_capacities);
  // Oversized spaces are refused before any stability check runs.
  std::uint64_t count = 0;
  long double raw = 1;
  for (int i = 0; i < instance.n(); ++i) raw *= instance.m() + 1;
  if (raw > static_cast<long double>(budget.max_enumerated)) {
    struct Stop {};
    try {
      search.Run([&](const std::vector<int>&) {
        if (++count > budget.max_enumerated) throw Stop{};
      });
    } catch (const Stop&) {
      Refuse(budget.max_enumerated);
    }
  }
  bool found = false;
  std::vector<Value> best_values;
  std::vector<int> best;
  std::int64_t candidates = 0;
  search.Run([&](const std::vector<int>& assignment) {
    ++candidates;
    Matching mu(instance.m(), assignment);
    if (!IsStable(instance, mu)) return;
    std::vector<Value> values = ComputeLeximinTuple(instance, mu).values();
    if (!found || CompareValueLists(values, best_values) == Order::kGreater) {
      found = true;
      best_values = std::move(values);
      best = assignment;
    }
  });
  return Finish(instance, "general", found, std::move(best), candidates);
}

SolverReport OracleLeximin(const Instance& instance, bool require_complete,
                           bool respect_capacities, OracleBudget budget) {
  if (Classify(instance).ranked) {
    return RankedOracle(instance, require_complete, respect_capacities, budget);
  }
  return OracleLeximinGeneral(instance, require_complete, respect_capacities,
                              budget);
}

}  // namespace lexmatch
