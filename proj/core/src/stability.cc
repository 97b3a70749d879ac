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

#include "lexmatch/stability.h"

#include "lexmatch/error.h"

namespace lexmatch {

std::optional<BlockingPair> FindBlockingPair(const Instance& instance,
                                             const Matching& matching) {
  if (!matching.FitsInstance(instance)) {
    throw Error(ErrorCode::kInvalidInput, "matching does not fit instance");
  }
  const Value zero;
  for (int i = 0; i < instance.n(); ++i) {
    const int current = matching.college_of(i);
    const Value& mine = current == kUnmatched ? zero : instance.u(i, current);
    for (int j = 0; j < instance.m(); ++j) {
      if (j == current || !(mine < instance.u(i, j))) continue;
      for (int other : matching.students_of(j)) {
        if (instance.v(j, other) < instance.v(j, i)) {
          return BlockingPair{i, j, other};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace lexmatch
