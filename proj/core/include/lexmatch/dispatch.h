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


#ifndef LEXMATCH_DISPATCH_H_
#define LEXMATCH_DISPATCH_H_

#include <string>
#include <string_view>

#include "lexmatch/instance.h"
#include "lexmatch/oracle.h"
#include "lexmatch/report.h"

namespace lexmatch {

enum class Algo {
  kAuto,
  kFast,
  kCapFast,
  kFastGen,
  kCapFastGen,
  kFastGenGreedy,
  kCapFastGenGreedy,
  kFastConst,
  kOracle,
};

Algo ParseAlgo(std::string_view name);
std::string_view AlgoName(Algo algo);

struct SolveOptions {
  // Oracle only: restrict to matchings that leave no agent unmatched.
  bool require_complete = false;
  OracleBudget budget;
};

// The solver `algo` resolves to on `instance`. kAuto routes by
// classification and throws Error(kNpHardRegime) outside the tractable
// regimes; kFast and kFastGen switch to their capacitated variants when a
// capacity can bind.
Algo Route(const Instance& instance, Algo algo);

SolverReport Solve(const Instance& instance, Algo algo,
                   const SolveOptions& options = {});

}  // namespace lexmatch

#endif  // LEXMATCH_DISPATCH_H_
