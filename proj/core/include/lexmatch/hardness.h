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


// Generators turning small instances of classic NP-hard problems into
// matching instances whose leximin optimum encodes the answer.

#ifndef LEXMATCH_HARDNESS_H_
#define LEXMATCH_HARDNESS_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "lexmatch/instance.h"
#include "lexmatch/value.h"

namespace lexmatch {

// Subset sum over distinct positive integers `a` with max(a) < target and
// target <= sum(a). The result has m = |a| + 1 colleges and n = 2|a|
// students; the last college collects the chosen subset, and the optimum
// gives it value `target` exactly when such a subset exists.
Instance SubsetSumToSmo(const std::vector<std::int64_t>& a,
                        std::int64_t target);

// Two colleges, one student per integer, V_ij = p_i. Requires an even sum.
Instance PartitionToSmo(const std::vector<std::int64_t>& p);

// |p| / 3 colleges, V_ij = p_i. Requires |p| divisible by 3 and the sum
// divisible by |p| / 3.
Instance ThreePartitionToSmo(const std::vector<std::int64_t>& p);

// Per-college target of the partition reductions.
std::int64_t PartitionTarget(const std::vector<std::int64_t>& p, int parts);

struct BinPackingOptions {
  int replication = 1;
  // Defaults to min(1 / (4 n^2), 1 / (2 D)) where D is the common
  // denominator of the weights.
  std::optional<Value> epsilon;
};

// Items with weights in [0, 1], `bins` unit bins, |weights| >= bins >= 2.
// With t = replication the instance has n = t |G| + 1 students and
// m = t k + 1 colleges; the last student and college are the dummies. The
// dummy college values every student at n when t = 1 and at (t + 1) n
// otherwise, so a packing exists iff the optimum leaves only the dummy
// student there.
Instance BinPackingToSmo(const std::vector<Value>& weights, int bins,
                         const BinPackingOptions& options = {});

}  // namespace lexmatch

#endif  // LEXMATCH_HARDNESS_H_
