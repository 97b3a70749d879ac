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


#ifndef LEXMATCH_GENERATE_H_
#define LEXMATCH_GENERATE_H_

#include <cstdint>
#include <string>
#include <string_view>

#include "lexmatch/instance.h"

namespace lexmatch {

enum class GenKind {
  kRankedIsometric,
  kRanked,
  kStrict,
  kWeak,
  kWeakRankedIsometric,
};

enum class CapacityMode { kNone, kUniform, kRandom };

struct GenSpec {
  GenKind kind = GenKind::kRankedIsometric;
  int n = 4;
  int m = 2;
  std::uint64_t seed = 1;
  CapacityMode capacity_mode = CapacityMode::kNone;
  // Used by kUniform.
  int uniform_capacity = 1;
  // Values are drawn from [1, hi]; 0 picks a default that suits the kind.
  std::int64_t hi = 0;
};

// Throws Error(kInvalidInput) for impossible specs, e.g. a value range too
// small for the distinct values a strict kind needs.
Instance Generate(const GenSpec& spec);

GenKind ParseGenKind(std::string_view name);
std::string_view GenKindName(GenKind kind);
CapacityMode ParseCapacityMode(std::string_view name);

}  // namespace lexmatch

#endif  // LEXMATCH_GENERATE_H_
