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

#ifndef LEXMATCH_RANKED_H_
#define LEXMATCH_RANKED_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "lexmatch/instance.h"
#include "lexmatch/matching.h"

namespace lexmatch {

// k[j] = |mu(c_j)|; college j holds students w_j .. w_j + k[j] - 1 where
// w_j = k[0] + ... + k[j-1].
using BoundaryVector = std::vector<int>;

// Contiguous matching for k over n students. Throws if sum(k) != n.
Matching ContiguousMatching(int n, const BoundaryVector& k);

// As above, for a ranked instance. Throws Error(kNotRanked) otherwise.
Matching MatchingFromBoundary(const Instance& instance,
                              const BoundaryVector& k);

// Recovers k when every student is matched and each college holds a
// contiguous block with blocks in college order. Empty colleges are allowed.
std::optional<BoundaryVector> BoundaryFromMatching(const Instance& instance,
                                                   const Matching& matching);

// Compositions of n into m parts with min_part <= k[j] <= max_part[j], in
// lexicographically descending order: (4,0), (3,1), ..., (0,4).
class CompositionEnumerator {
 public:
  CompositionEnumerator(int n, int m, int min_part,
                        std::vector<int> max_part = {});

  // Writes the next composition and returns true, or returns false when
  // exhausted.
  bool Next(BoundaryVector* out);

 private:
  bool Fill(int from, int remaining);

  int n_;
  int m_;
  int min_part_;
  std::vector<int> max_part_;
  std::vector<int> suffix_max_;
  BoundaryVector current_;
  bool started_ = false;
  bool done_ = false;
};

// C(n - 1, m - 1) when positive, C(n + m - 1, m - 1) otherwise.
// Saturates at UINT64_MAX.
std::uint64_t CountCompositions(int n, int m, bool positive_parts);

// Streams every stable matching of a ranked instance that matches all
// students, in CompositionEnumerator order. The callback returns false to
// stop early. Throws Error(kNotRanked) for unranked instances.
void ForEachStableMatching(
    const Instance& instance, bool require_complete, bool respect_capacities,
    const std::function<bool(const BoundaryVector&, const Matching&)>& visit);

std::vector<Matching> EnumerateStable(const Instance& instance,
                                      bool require_complete,
                                      bool respect_capacities);

// Moves student i from c_{down-1} to c_down and cascades one student down at
// every college between up and down, so |mu(c_up)| shrinks by one and
// |mu(c_down)| grows by one. The chain must be aligned: the moving student
// at each step is the lowest-ranked member of its college.
Matching Demote(const Matching& matching, int i, int down, int up);

// Boundary form of Demote.
BoundaryVector ShiftBoundary(const BoundaryVector& k, int up, int down);

// Cascade that fills each college as far as its capacity allows while
// leaving one student for every later college. nullopt when no complete
// capacity-feasible matching exists.
std::optional<BoundaryVector> StudentOptimalBoundary(
    int n, const std::vector<int>& capacities);

}  // namespace lexmatch

#endif  // LEXMATCH_RANKED_H_
