// Copyright 2026 The vqhe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vqhe/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "vqhe/model_io.hpp"

namespace vqhe::cli {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string without_timings(const std::string& doc) {
  auto j = nlohmann::json::parse(doc);
  j.erase("timings");
  return j.dump();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("vqhe_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
    three_term_ = (dir_ / "three_term.txt").string();
    std::ofstream(three_term_) << "3.0 XI\n-1.0 YY\n2.0 ZZ\n";
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path dir_;
  std::string three_term_;
};

TEST_F(CliTest, GroupThreeTermFile) {
  const Outcome o = invoke({"group", "--input", three_term_});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  const auto j = nlohmann::json::parse(o.out);
  EXPECT_EQ(j.at("command"), "group");
  EXPECT_NEAR(j.at("results").at("grouped_norm").get<double>(), 5.2360679774997898, 1e-12);
  for (const char* key : {"command", "input_digest", "seed", "results", "timings"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
}

TEST_F(CliTest, MissingFileExitsWithTwoAndNoOutput) {
  const std::string missing = (dir_ / "absent.txt").string();
  const Outcome o = invoke({"engineer", "--input", missing});
  EXPECT_EQ(o.code, kExitInput);
  EXPECT_TRUE(o.out.empty());
  EXPECT_NE(o.err.find(missing), std::string::npos);
}

TEST_F(CliTest, MalformedFileExitsNonzeroWithoutJson) {
  const std::string bad = (dir_ / "bad.txt").string();
  std::ofstream(bad) << "1.0 XX\noops YY\n";
  const Outcome o = invoke({"group", "--input", bad});
  EXPECT_EQ(o.code, kExitInput);
  EXPECT_TRUE(o.out.empty());
  EXPECT_NE(o.err.find("line 2"), std::string::npos);
}

TEST_F(CliTest, ZeroHamiltonianIsRejected) {
  const std::string zero = (dir_ / "zero.txt").string();
  std::ofstream(zero) << "1.0 X\n-1.0 X\n";
  const Outcome o = invoke({"engineer", "--input", zero});
  EXPECT_NE(o.code, kExitOk);
  EXPECT_TRUE(o.out.empty());
}

TEST_F(CliTest, EngineerWritesFileAndStaysWithinOriginalNorm) {
  const std::string out_file = (dir_ / "eng.txt").string();
  const Outcome o = invoke({"engineer", "--ham", "ising-neighbor:3", "--depth", "1", "--restarts",
                            "2", "--seed", "42", "--engineered-out", out_file});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  const auto j = nlohmann::json::parse(o.out);
  EXPECT_LE(j.at("results").at("engineered_norm").get<double>(), 5.0);
  const Hamiltonian written = read_pauli_sum_file(out_file);
  EXPECT_NEAR(pauli_norm(written), j.at("results").at("engineered_norm").get<double>(), 1e-9);
}

TEST_F(CliTest, RepeatedRunsAreByteIdentical) {
  const std::string eng = (dir_ / "eng.txt").string();
  const std::vector<std::vector<std::string>> commands = {
      {"engineer", "--ham", "ising-neighbor:3", "--restarts", "3", "--seed", "5",
       "--engineered-out", eng, "--threads", "2"},
      {"group", "--input", three_term_, "--strategy", "qwc"},
      {"qdrift", "--input", three_term_, "--time", "0.5", "--gates", "10,40", "--trials", "20", "--seed", "7"},
      {"estimate-q", "--input", three_term_, "--shots", "1000", "--seed", "3"},
  };
  for (const auto& args : commands) {
    const Outcome a = invoke(args);
    const Outcome b = invoke(args);
    ASSERT_EQ(a.code, kExitOk) << a.err;
    EXPECT_EQ(without_timings(a.out), without_timings(b.out)) << args[0];
  }
  const Outcome c1 = invoke({"compare", "--sizes", "2..3", "--restarts", "2", "--seed", "1"});
  const Outcome c2 = invoke({"compare", "--sizes", "2..3", "--restarts", "2", "--seed", "1"});
  ASSERT_EQ(c1.code, kExitOk) << c1.err;
  EXPECT_EQ(c1.out, c2.out);
}

TEST_F(CliTest, EstimateQAnalyticMatchesCostQ) {
  const Outcome o = invoke({"estimate-q", "--input", three_term_, "--shots", "0"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  const auto r = nlohmann::json::parse(o.out).at("results");
  EXPECT_NEAR(r.at("q_value").get<double>(), r.at("cost_q").get<double>(), 1e-12);
  EXPECT_EQ(r.at("mode"), "analytic");
}

TEST_F(CliTest, EstimateQFromStateFile) {
  const std::string state = (dir_ / "psi.txt").string();
  std::ofstream(state) << "0.7071067811865476\n0.7071067811865476\n";
  const Outcome o = invoke({"estimate-q", "--state", state});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  EXPECT_NEAR(nlohmann::json::parse(o.out).at("results").at("q_value").get<double>(), 0.5, 1e-12);
}

TEST_F(CliTest, CompareRowsNeverIncreaseTheNorm) {
  const Outcome o = invoke({"compare", "--family", "ising-neighbor", "--sizes", "2..4",
                            "--restarts", "2", "--depth", "1"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  std::istringstream in(o.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line.rfind("size,", 0), 0u);
  int rows = 0;
  while (std::getline(in, line)) {
    std::vector<double> cells;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(std::stod(cell));
    ASSERT_EQ(cells.size(), 9u);
    EXPECT_LE(cells[3], cells[2]);
    EXPECT_LE(cells[5], cells[3] + 1e-12);
    ++rows;
  }
  EXPECT_EQ(rows, 3);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kExitInput);
  EXPECT_EQ(invoke({"group"}).code, kExitInput);
  EXPECT_EQ(invoke({"group", "--ham", "heisenberg:3"}).code, kExitInput);
  EXPECT_EQ(invoke({"group", "--input", three_term_, "--strategy", "best"}).code, kExitInput);
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitInput);
}

}  // namespace
}  // namespace vqhe::cli
