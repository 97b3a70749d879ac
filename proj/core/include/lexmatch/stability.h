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

#ifndef LEXMATCH_STABILITY_H_
#define LEXMATCH_STABILITY_H_

#include <optional>

#include "lexmatch/instance.h"
#include "lexmatch/matching.h"

namespace lexmatch {

// Student s_i and college c_j prefer each other: u_i(c_j) > u_i(mu(s_i))
// and v_j(s_i) > v_j(s_displaced) for the member s_displaced of mu(c_j).
struct BlockingPair {
  int student = 0;
  int college = 0;
  int displaced = 0;

  friend bool operator==(const BlockingPair& a, const BlockingPair& b) = default;
};

// First blocking pair by student, then college; the displaced student is the
// lowest-index member that qualifies. Stability is exactly the absence of
// blocking pairs; empty seats are not a defect.
std::optional<BlockingPair> FindBlockingPair(const Instance& instance,
                                             const Matching& matching);

inline bool IsStable(const Instance& instance, const Matching& matching) {
  return !FindBlockingPair(instance, matching).has_value();
}

}  // namespace lexmatch

#endif  // LEXMATCH_STABILITY_H_
