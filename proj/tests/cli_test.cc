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


// Runs the lexmatch binary end to end.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include "gtest/gtest.h"
#include "lexmatch/json_io.h"

namespace lexmatch {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("lexmatch_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  // Returns the exit status; stdout lands in out_.
  int Run(const std::string& args) {
    const fs::path out = dir_ / "stdout.txt";
    const std::string cmd = std::string(LEXMATCH_CLI) + " " + args + " > " +
                            out.string() + " 2> " + (dir_ / "stderr.txt").string();
    const int status = std::system(cmd.c_str());
    std::ifstream in(out);
    std::stringstream ss;
    ss << in.rdbuf();
    out_ = ss.str();
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  fs::path dir_;
  std::string out_;
};

constexpr char kExample[] =
    R"({"values": [[100, 10], [99, 9], [20, 4], [19, 3]]})";

TEST_F(CliTest, SolveExample) {
  const std::string in = Write("example.json", kExample);
  ASSERT_EQ(Run("solve --input " + in), 0);
  const Json j = ParseJson(out_);
  EXPECT_EQ(j["algorithm"], "fast");
  EXPECT_EQ(j["assignment"], Json::parse("[0,1,1,1]"));
  EXPECT_EQ(j["boundary"], Json::parse("[1,3]"));
  ASSERT_EQ(Run("solve --algo oracle --complete --input " + in), 0);
  EXPECT_EQ(ParseJson(out_)["assignment"], Json::parse("[0,1,1,1]"));
}

TEST_F(CliTest, SolveWritesMatchingAndVerifyReadsIt) {
  const std::string in = Write("example.json", kExample);
  const std::string mu = (dir_ / "mu.json").string();
  ASSERT_EQ(Run("solve --input " + in + " --output " + mu), 0);
  ASSERT_EQ(Run("verify --input " + in + " --matching " + mu), 0);
  const Json j = ParseJson(out_);
  EXPECT_TRUE(j["stable"]);
  EXPECT_TRUE(j["blocking_pair"].is_null());
  EXPECT_TRUE(j["classification"]["ranked"]);
}

TEST_F(CliTest, VerifyReportsCertificate) {
  const std::string in = Write("example.json", kExample);
  const std::string mu = Write("mu.json", R"({"assignment": [0, 1, 0, 1]})");
  ASSERT_EQ(Run("verify --input " + in + " --matching " + mu), 0);
  const Json j = ParseJson(out_);
  EXPECT_FALSE(j["stable"]);
  EXPECT_EQ(j["blocking_pair"]["student"], 1);
  EXPECT_EQ(j["blocking_pair"]["college"], 0);
}

TEST_F(CliTest, EnumerateAndFairness) {
  const std::string in = Write("example.json", kExample);
  ASSERT_EQ(Run("enumerate --input " + in), 0);
  std::istringstream lines(out_);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) ++count;
  EXPECT_EQ(count, 5);
  ASSERT_EQ(Run("enumerate --complete --input " + in), 0);
  EXPECT_EQ(std::count(out_.begin(), out_.end(), '\n'), 3);

  const std::string mu = Write("mu.json", R"({"assignment": [1, 1, 1, 1]})");
  ASSERT_EQ(Run("fairness --input " + in + " --matching " + mu), 0);
  EXPECT_EQ(ParseJson(out_)["E_total"], "238");
}

TEST_F(CliTest, GenIsDeterministic) {
  ASSERT_EQ(Run("gen --kind ranked --n 6 --m 3 --seed 5"), 0);
  const std::string first = out_;
  ASSERT_EQ(Run("gen --kind ranked --n 6 --m 3 --seed 5"), 0);
  EXPECT_EQ(out_, first);
  EXPECT_EQ(ParseJson(first)["n"], 6);
}

TEST_F(CliTest, ReduceFeedsSolve) {
  const std::string problem = Write("p.json", R"({"p": [1, 1, 2, 2]})");
  const std::string inst = (dir_ / "inst.json").string();
  ASSERT_EQ(Run("reduce --from partition --input " + problem + " --output " + inst),
            0);
  EXPECT_EQ(Run("solve --input " + inst), 3);
  ASSERT_EQ(Run("solve --algo oracle --complete --input " + inst), 0);
  EXPECT_EQ(ParseJson(out_)["leximin"].back(), "3");
}

TEST_F(CliTest, ExitCodes) {
  const std::string t2 = Write("example.json", kExample);
  EXPECT_EQ(Run("solve --input " + Write("bad.json", "{")), 2);
  EXPECT_EQ(Run("solve --input " + dir_.string() + "/missing.json"), 2);
  EXPECT_EQ(Run("solve"), 2);
  EXPECT_EQ(Run("frobnicate"), 2);
  EXPECT_EQ(Run("solve --algo fastest --input " + t2), 2);
  EXPECT_EQ(Run("solve --algo oracle --budget 2 --input " + t2), 5);
  const std::string tight = Write(
      "tight.json",
      R"({"values": [[100, 10], [99, 9], [20, 4], [19, 3]], "capacities": [1, 2]})");
  EXPECT_EQ(Run("solve --input " + tight), 4);
  const std::string weak =
      Write("weak.json", R"({"values": [[4, 3], [4, 3], [2, 1]]})");
  EXPECT_EQ(Run("solve --input " + weak), 3);
  EXPECT_EQ(Run("reduce --from subset-sum --input " +
                Write("ss.json", R"({"a": [1, 2, 3], "target": 3})")),
            2);
}

TEST_F(CliTest, BenchCsv) {
  ASSERT_EQ(Run("bench --algos fast,fast-gen --sizes 20,40 --m 4"), 0);
  EXPECT_EQ(std::count(out_.begin(), out_.end(), '\n'), 5);
  EXPECT_EQ(out_.substr(0, out_.find('\n')),
            "algorithm,n,m,seed,wall_ms,steps,candidates");
}

}  // namespace
}  // namespace lexmatch
