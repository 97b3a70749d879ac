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

#include "lexmatch/ranked.h"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "lexmatch/classify.h"
#include "lexmatch/error.h"

namespace lexmatch {

Matching ContiguousMatching(int n, const BoundaryVector& k) {
  std::vector<int> assignment;
  assignment.reserve(n);
  for (int j = 0; j < static_cast<int>(k.size()); ++j) {
    if (k[j] < 0) {
      throw Error(ErrorCode::kInvalidInput, "negative block size");
    }
    assignment.insert(assignment.end(), k[j], j);
  }
  if (static_cast<int>(assignment.size()) != n) {
    throw Error(ErrorCode::kInvalidInput,
                "boundary vector sums to " + std::to_string(assignment.size()) +
                    ", expected " + std::to_string(n));
  }
  return Matching(static_cast<int>(k.size()), std::move(assignment));
}

Matching MatchingFromBoundary(const Instance& instance,
                              const BoundaryVector& k) {
  if (!Classify(instance).ranked) {
    throw Error(ErrorCode::kNotRanked, "instance is not ranked");
  }
  if (static_cast<int>(k.size()) != instance.m()) {
    throw Error(ErrorCode::kInvalidInput, "boundary vector needs m entries");
  }
  return ContiguousMatching(instance.n(), k);
}

std::optional<BoundaryVector> BoundaryFromMatching(const Instance& instance,
                                                   const Matching& matching) {
  if (!matching.FitsInstance(instance) || !matching.AllStudentsMatched()) {
    return std::nullopt;
  }
  BoundaryVector k(instance.m(), 0);
  int last = 0;
  for (int i = 0; i < instance.n(); ++i) {
    const int j = matching.college_of(i);
    if (j < last) return std::nullopt;
    last = j;
    ++k[j];
  }
  return k;
}

CompositionEnumerator::CompositionEnumerator(int n, int m, int min_part,
                                             std::vector<int> max_part)
    : n_(n), m_(m), min_part_(min_part), max_part_(std::move(max_part)) {
  if (max_part_.empty()) max_part_.assign(m_, n_);
  if (static_cast<int>(max_part_.size()) != m_) {
    throw Error(ErrorCode::kInvalidInput, "max_part needs m entries");
  }
  suffix_max_.assign(m_ + 1, 0);
  for (int j = m_ - 1; j >= 0; --j) {
    suffix_max_[j] = suffix_max_[j + 1] + std::min(max_part_[j], n_);
  }
  current_.assign(m_, 0);
  done_ = m_ < 1 || static_cast<long>(min_part_) * m_ > n_ ||
          suffix_max_[0] < n_ ||
          *std::min_element(max_part_.begin(), max_part_.end()) < min_part_;
}

bool CompositionEnumerator::Fill(int from, int remaining) {
  for (int j = from; j < m_; ++j) {
    const int later = m_ - 1 - j;
    int take = std::min(max_part_[j], remaining - min_part_ * later);
    if (j == m_ - 1) take = remaining;
    if (take < min_part_ || take > max_part_[j] ||
        remaining - take > suffix_max_[j + 1]) {
      return false;
    }
    current_[j] = take;
    remaining -= take;
  }
  return remaining == 0;
}

bool CompositionEnumerator::Next(BoundaryVector* out) {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    if (!Fill(0, n_)) {
      done_ = true;
      return false;
    }
    *out = current_;
    return true;
  }
  int suffix = current_[m_ - 1];
  for (int j = m_ - 2; j >= 0; --j) {
    if (current_[j] > min_part_ && suffix + 1 <= suffix_max_[j + 1]) {
      --current_[j];
      if (Fill(j + 1, suffix + 1)) {
        *out = current_;
        return true;
      }
      ++current_[j];
    }
    suffix += current_[j];
  }
  done_ = true;
  return false;
}

std::uint64_t CountCompositions(int n, int m, bool positive_parts) {
  if (m < 1) return 0;
  const int top = positive_parts ? n - 1 : n + m - 1;
  const int choose = m - 1;
  if (top < 0 || choose > top) return 0;
  unsigned __int128 c = 1;
  const auto cap = std::numeric_limits<std::uint64_t>::max();
  for (int t = 0; t < choose; ++t) {
    c = c * static_cast<unsigned>(top - t) / static_cast<unsigned>(t + 1);
    if (c > cap) return cap;
  }
  return static_cast<std::uint64_t>(c);
}

void ForEachStableMatching(
    const Instance& instance, bool require_complete, bool respect_capacities,
    const std::function<bool(const BoundaryVector&, const Matching&)>& visit) {
  if (!Classify(instance).ranked) {
    throw Error(ErrorCode::kNotRanked, "instance is not ranked");
  }
  std::vector<int> max_part;
  if (respect_capacities) max_part = instance.capacities();
  CompositionEnumerator it(instance.n(), instance.m(), require_complete ? 1 : 0,
                           max_part);
  BoundaryVector k;
  while (it.Next(&k)) {
    if (!visit(k, ContiguousMatching(instance.n(), k))) return;
  }
}

std::vector<Matching> EnumerateStable(const Instance& instance,
                                      bool require_complete,
                                      bool respect_capacities) {
  std::vector<Matching> out;
  ForEachStableMatching(instance, require_complete, respect_capacities,
                        [&](const BoundaryVector&, const Matching& mu) {
                          out.push_back(mu);
                          return true;
                        });
  return out;
}

Matching Demote(const Matching& matching, int i, int down, int up) {
  const int m = matching.num_colleges();
  if (up < 0 || down >= m || up >= down) {
    throw Error(ErrorCode::kPrecondition, "demote needs 0 <= up < down < m");
  }
  if (matching.students_of(up).empty()) {
    throw Error(ErrorCode::kPrecondition, "demote from an empty college");
  }
  std::vector<int> assignment = matching.assignment();
  int t = i;
  for (int p = down; p > up; --p, --t) {
    const auto& members = matching.students_of(p - 1);
    if (t < 0 || members.empty() || members.back() != t) {
      throw Error(ErrorCode::kPrecondition,
                  "demote chain misaligned at college " + std::to_string(p - 1));
    }
    assignment[t] = p;
  }
  return Matching(m, std::move(assignment));
}

BoundaryVector ShiftBoundary(const BoundaryVector& k, int up, int down) {
  const int m = static_cast<int>(k.size());
  if (up < 0 || down >= m || up == down || k[up] < 1) {
    throw Error(ErrorCode::kPrecondition, "invalid boundary shift");
  }
  BoundaryVector out = k;
  --out[up];
  ++out[down];
  return out;
}

std::optional<BoundaryVector> StudentOptimalBoundary(
    int n, const std::vector<int>& capacities) {
  const int m = static_cast<int>(capacities.size());
  if (m < 1 || n < m) return std::nullopt;
  BoundaryVector k(m);
  int remaining = n;
  for (int j = 0; j < m; ++j) {
    const int take = std::min(capacities[j], remaining - (m - 1 - j));
    if (take < 1) return std::nullopt;
    k[j] = take;
    remaining -= take;
  }
  if (remaining != 0) return std::nullopt;
  return k;
}

}  // namespace lexmatch
