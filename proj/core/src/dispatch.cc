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


#include "lexmatch/dispatch.h"

#include <array>
#include <string>
#include <utility>

#include "lexmatch/classify.h"
#include "lexmatch/error.h"
#include "lexmatch/fast.h"
#include "lexmatch/fast_const.h"
#include "lexmatch/fast_gen.h"

namespace lexmatch {
namespace {

constexpr std::array<std::pair<Algo, std::string_view>, 9> kNames = {{
    {Algo::kAuto, "auto"},
    {Algo::kFast, "fast"},
    {Algo::kCapFast, "cap-fast"},
    {Algo::kFastGen, "fast-gen"},
    {Algo::kCapFastGen, "cap-fast-gen"},
    {Algo::kFastGenGreedy, "fast-gen-greedy"},
    {Algo::kCapFastGenGreedy, "cap-fast-gen-greedy"},
    {Algo::kFastConst, "fast-const"},
    {Algo::kOracle, "oracle"},
}};

}  // namespace

Algo ParseAlgo(std::string_view name) {
  for (const auto& [algo, text] : kNames) {
    if (text == name) return algo;
  }
  throw Error(ErrorCode::kInvalidInput,
              "unknown algorithm \"" + std::string(name) + "\"");
}

std::string_view AlgoName(Algo algo) {
  for (const auto& [a, text] : kNames) {
    if (a == algo) return text;
  }
  return "?";
}

Algo Route(const Instance& instance, Algo algo) {
  const bool capped = !instance.HasNonBindingCapacities();
  switch (algo) {
    case Algo::kFast:
      return capped ? Algo::kCapFast : Algo::kFast;
    case Algo::kFastGen:
      return capped ? Algo::kCapFastGen : Algo::kFastGen;
    case Algo::kFastGenGreedy:
      return capped ? Algo::kCapFastGenGreedy : Algo::kFastGenGreedy;
    case Algo::kAuto:
      break;
    default:
      return algo;
  }
  const Classification c = Classify(instance);
  if (c.ranked && c.isometric) return capped ? Algo::kCapFast : Algo::kFast;
  if (c.ranked) return capped ? Algo::kCapFastGen : Algo::kFastGen;
  if (c.strict_students && c.strict_colleges && instance.m() == 2) {
    if (instance.capacity(0) < instance.n() ||
        instance.capacity(1) < instance.n()) {
      throw Error(ErrorCode::kNotAdmissible,
                  "fast-const needs capacities b_j >= n; use --algo oracle");
    }
    return Algo::kFastConst;
  }
  throw Error(ErrorCode::kNpHardRegime,
              "no polynomial solver for this regime (" + c.ToString() +
                  "); use --algo oracle on small instances");
}

SolverReport Solve(const Instance& instance, Algo algo,
                   const SolveOptions& options) {
  switch (Route(instance, algo)) {
    case Algo::kFast:
      return Fast(instance);
    case Algo::kCapFast:
      return CapFast(instance);
    case Algo::kFastGen:
      return FastGen(instance);
    case Algo::kCapFastGen:
      return CapFastGen(instance);
    case Algo::kFastGenGreedy:
      return FastGenGreedy(instance);
    case Algo::kCapFastGenGreedy:
      return CapFastGenGreedy(instance);
    case Algo::kFastConst:
      return FastConst(instance);
    case Algo::kOracle:
      return OracleLeximin(instance, options.require_complete, true,
                           options.budget);
    case Algo::kAuto:
      break;
  }
  throw Error(ErrorCode::kPrecondition, "unroutable algorithm");
}

}  // namespace lexmatch
