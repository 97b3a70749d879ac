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


// lexmatch: command line front end.
//
// Exit codes: 0 ok, 2 invalid input, 3 NP-hard regime, 4 infeasible,
// 5 oracle budget exceeded.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lexmatch/bench.h"
#include "lexmatch/classify.h"
#include "lexmatch/dispatch.h"
#include "lexmatch/error.h"
#include "lexmatch/fairness.h"
#include "lexmatch/generate.h"
#include "lexmatch/json_io.h"
#include "lexmatch/leximin.h"
#include "lexmatch/ranked.h"
#include "lexmatch/stability.h"

namespace lexmatch {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitNpHard = 3;
constexpr int kExitInfeasible = 4;
constexpr int kExitBudget = 5;

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNpHardRegime:
      return kExitNpHard;
    case ErrorCode::kInfeasible:
      return kExitInfeasible;
    case ErrorCode::kBudgetExceeded:
      return kExitBudget;
    default:
      return kExitInvalid;
  }
}

std::string ReadAll(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidInput, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteText(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kInvalidInput, "cannot write " + path);
  out << text;
}

Instance LoadInstance(const std::string& path) {
  return InstanceFromJson(ParseJson(ReadAll(path)));
}

Matching LoadMatching(const std::string& path, const Instance& instance) {
  Matching mu = MatchingFromJson(ParseJson(ReadAll(path)), instance.m());
  if (!mu.FitsInstance(instance)) {
    throw Error(ErrorCode::kInvalidInput, "matching does not fit instance");
  }
  return mu;
}

template <typename T>
std::vector<T> SplitList(const std::string& text, T (*parse)(const std::string&)) {
  std::vector<T> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(parse(item));
  }
  return out;
}

int ParseSize(const std::string& s) {
  try {
    std::size_t used = 0;
    const int x = std::stoi(s, &used);
    if (used == s.size()) return x;
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::kInvalidInput, "bad size \"" + s + "\"");
}

Algo ParseAlgoString(const std::string& s) { return ParseAlgo(s); }

struct Options {
  std::string input;
  std::string output;
  std::string matching;
  std::string algo = "auto";
  bool complete = false;
  bool caps = false;
  std::uint64_t budget = OracleBudget{}.max_enumerated;
  std::string from;
  int replicate = 1;
  std::string kind = "ranked_isometric";
  int n = 4;
  int m = 2;
  std::uint64_t seed = 1;
  std::string cap_mode = "none";
  int cap = 1;
  std::int64_t hi = 0;
  std::string algos = "fast";
  std::string sizes = "100,200,400";
  int repeats = 1;
  bool median = false;
};

int RunSolve(const Options& o) {
  const Instance instance = LoadInstance(o.input);
  SolveOptions so;
  so.require_complete = o.complete;
  so.budget.max_enumerated = o.budget;
  const SolverReport report = Solve(instance, ParseAlgo(o.algo), so);
  if (!o.output.empty()) {
    WriteText(o.output, MatchingToJson(report.matching).dump() + "\n");
  }
  std::cout << ReportToJson(report).dump() << "\n";
  return kExitOk;
}

int RunVerify(const Options& o) {
  const Instance instance = LoadInstance(o.input);
  const Matching mu = LoadMatching(o.matching, instance);
  const auto pair = FindBlockingPair(instance, mu);
  const Json out{{"stable", !pair.has_value()},
                 {"blocking_pair", BlockingPairToJson(pair)},
                 {"complete", mu.IsComplete()},
                 {"respects_capacities", mu.RespectsCapacities(instance)},
                 {"leximin", LeximinToJson(ComputeLeximinTuple(instance, mu))},
                 {"classification", ClassificationToJson(Classify(instance))}};
  std::cout << out.dump() << "\n";
  return kExitOk;
}

int RunEnumerate(const Options& o) {
  const Instance instance = LoadInstance(o.input);
  ForEachStableMatching(instance, o.complete, o.caps,
                        [](const BoundaryVector&, const Matching& mu) {
                          std::cout << MatchingToJson(mu).dump() << "\n";
                          return true;
                        });
  return kExitOk;
}

int RunFairness(const Options& o) {
  const Instance instance = LoadInstance(o.input);
  const Matching mu = LoadMatching(o.matching, instance);
  std::cout << FairnessToJson(EvaluateFairness(instance, mu)).dump() << "\n";
  return kExitOk;
}

int RunGen(const Options& o) {
  GenSpec spec;
  spec.kind = ParseGenKind(o.kind);
  spec.n = o.n;
  spec.m = o.m;
  spec.seed = o.seed;
  spec.capacity_mode = ParseCapacityMode(o.cap_mode);
  spec.uniform_capacity = o.cap;
  spec.hi = o.hi;
  WriteText(o.output, InstanceToJson(Generate(spec)).dump() + "\n");
  return kExitOk;
}

int RunReduce(const Options& o) {
  const Instance instance =
      ReductionFromJson(o.from, ParseJson(ReadAll(o.input)), o.replicate);
  WriteText(o.output, InstanceToJson(instance).dump() + "\n");
  return kExitOk;
}

int RunBenchCommand(const Options& o) {
  BenchSpec spec;
  spec.algos = SplitList<Algo>(o.algos, ParseAlgoString);
  spec.sizes = SplitList<int>(o.sizes, ParseSize);
  spec.m = o.m;
  spec.repeats = o.repeats;
  spec.seed = o.seed;
  std::ostringstream csv;
  const std::vector<BenchRecord> records = RunBench(spec);
  WriteCsv(csv, o.median ? MedianBySize(records) : records);
  WriteText(o.output, csv.str());
  return kExitOk;
}

int Main(int argc, char** argv) {
  CLI::App app{"Leximin-optimal stable many-to-one matchings"};
  app.require_subcommand(1);
  Options o;

  auto* solve = app.add_subcommand("solve", "Compute a leximin-optimal stable matching");
  solve->add_option("--algo", o.algo,
                    "auto|fast|cap-fast|fast-gen|cap-fast-gen|fast-gen-greedy|"
                    "cap-fast-gen-greedy|fast-const|oracle");
  solve->add_option("--input", o.input, "Instance JSON, or - for stdin")->required();
  solve->add_option("--output", o.output, "Write the matching JSON here");
  solve->add_flag("--complete", o.complete, "Oracle: only complete matchings");
  solve->add_option("--budget", o.budget, "Oracle: maximum candidates examined");

  auto* verify = app.add_subcommand("verify", "Check stability and print the leximin tuple");
  verify->add_option("--input", o.input)->required();
  verify->add_option("--matching", o.matching)->required();

  auto* enumerate = app.add_subcommand("enumerate", "List the stable matchings of a ranked instance");
  enumerate->add_option("--input", o.input)->required();
  enumerate->add_flag("--complete", o.complete, "Skip matchings with an empty college");
  enumerate->add_flag("--caps", o.caps, "Respect capacities");

  auto* fairness = app.add_subcommand("fairness", "Envy, EF1/EFX and welfare of a matching");
  fairness->add_option("--input", o.input)->required();
  fairness->add_option("--matching", o.matching)->required();

  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--kind", o.kind,
                  "ranked_isometric|ranked|strict|weak|weak_ranked_isometric");
  gen->add_option("--n", o.n);
  gen->add_option("--m", o.m);
  gen->add_option("--seed", o.seed);
  gen->add_option("--capacities", o.cap_mode, "none|uniform|random");
  gen->add_option("--cap", o.cap, "Capacity for --capacities uniform");
  gen->add_option("--hi", o.hi, "Largest drawn value");
  gen->add_option("--output", o.output);

  auto* reduce = app.add_subcommand("reduce", "Build the matching instance of a reduction");
  reduce->add_option("--from", o.from, "subset-sum|partition|3partition|bin-packing")
      ->required();
  reduce->add_option("--input", o.input, "Source problem JSON")->required();
  reduce->add_option("--replicate", o.replicate, "Bin packing replication t");
  reduce->add_option("--output", o.output);

  auto* bench = app.add_subcommand("bench", "Step counters and wall time as CSV");
  bench->add_option("--algos", o.algos, "Comma-separated algorithm names");
  bench->add_option("--sizes", o.sizes, "Comma-separated student counts");
  bench->add_option("--m", o.m);
  bench->add_option("--repeats", o.repeats);
  bench->add_flag("--median", o.median, "One row per size with median counters");
  bench->add_option("--seed", o.seed);
  bench->add_option("--output", o.output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*solve) return RunSolve(o);
    if (*verify) return RunVerify(o);
    if (*enumerate) return RunEnumerate(o);
    if (*fairness) return RunFairness(o);
    if (*gen) return RunGen(o);
    if (*reduce) return RunReduce(o);
    if (*bench) return RunBenchCommand(o);
  } catch (const Error& e) {
    std::cerr << "lexmatch: " << ErrorCodeName(e.code()) << ": " << e.what()
              << "\n";
    return ExitCodeFor(e.code());
  }
  return kExitInvalid;
}

}  // namespace
}  // namespace lexmatch

int main(int argc, char** argv) { return lexmatch::Main(argc, argv); }
