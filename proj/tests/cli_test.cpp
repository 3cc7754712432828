// Copyright 2026 The sumprod Authors
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


#include <gtest/gtest.h>

#include <filesystem>
#include <algorithm>
#include <fstream>
#include <iterator>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"
#include "sumprod/io.hpp"

namespace sumprod::cli {
namespace {

using Json = nlohmann::ordered_json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "sumprod");
  std::vector<char const*> argv;
  for (std::string const& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int const code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("sumprod_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string file(std::string const& name, std::string const& text) {
    auto const path = dir_ / name;
    write_text_file(path, text);
    return path.string();
  }

  std::filesystem::path dir_;
};

TEST_F(CliTest, VerifyEmitsConfigAndReports) {
  Result const r = invoke({"--seed", "7", "verify", "--claims", "vinh,szonyi", "--p", "5", "--trials", "20"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  Json const j = Json::parse(r.out);
  EXPECT_EQ(j["config"]["seed"], 7);
  ASSERT_EQ(j["reports"].size(), 2u);
  EXPECT_EQ(j["reports"][0]["claim_id"], "vinh");
  EXPECT_EQ(j["reports"][0]["trials"], 20);
  EXPECT_NE(r.err.find("total violations: 0"), std::string::npos);
  // Same command, same bytes.
  EXPECT_EQ(invoke({"--seed", "7", "verify", "--claims", "vinh,szonyi", "--p", "5", "--trials", "20"}).out, r.out);
}

TEST_F(CliTest, ConfigFile) {
  std::string const cfg = file("c.json", R"({"claims": ["ruzsa"], "p_list": [5], "trials": 3, "seed": 11})");
  Result const r = invoke({"verify", "--config", cfg});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  Json const j = Json::parse(r.out);
  EXPECT_EQ(j["config"]["seed"], 11);
  EXPECT_EQ(j["reports"][0]["trials"], 3);
  EXPECT_EQ(invoke({"verify", "--config", file("bad.json", "{")}).code, kExitUsage);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(invoke({"verify", "--suite", "nosuch"}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify", "--claims", "nosuch"}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify", "--p", "4"}).code, kExitUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(invoke({"--format", "xml", "verify"}).code, kExitUsage);
  EXPECT_EQ(invoke({"growth", "--in", (dir_ / "missing.txt").string()}).code, kExitUsage);
  EXPECT_EQ(invoke({"scan", "--claims", "vinh"}).code, kExitUsage);
  Result const help = invoke({"--help"});
  EXPECT_EQ(help.code, kExitOk);
  EXPECT_EQ(invoke({"directions", "--in", file("bad.txt", "points 7\n1\n")}).code, kExitUsage);
}

TEST_F(CliTest, ScanWritesCsvWithConfigLine) {
  Result const r = invoke({"scan", "--claims", "diameter-scan", "--p", "5,7,11"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::istringstream lines(r.out);
  std::string first, second;
  std::getline(lines, first);
  std::getline(lines, second);
  ASSERT_EQ(first.rfind("# config ", 0), 0u);
  EXPECT_EQ(Json::parse(first.substr(9))["claims"][0], "diameter-scan");
  EXPECT_EQ(second, "p,size,lhs,rhs,ratio");
  EXPECT_NE(r.out.find("\n5,"), std::string::npos);
}

TEST_F(CliTest, BareScanRunsEveryScalingClaim) {
  Result const r = invoke({"scan"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find(R"("suite":"scan")"), std::string::npos);
  EXPECT_GT(std::count(r.out.begin(), r.out.end(), '\n'), 20);
}

TEST_F(CliTest, OutFile) {
  std::string const out = (dir_ / "report.json").string();
  Result const r = invoke({"--out", out, "verify", "--claims", "szonyi", "--p", "3"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(Json::parse(std::ifstream(out))["reports"][0]["trials"], 72);
}

TEST_F(CliTest, Growth) {
  Result const r = invoke({"growth", "--in", file("a.txt", "SL2 5\n0 4 1 0\n0 1 4 0\n1 1 0 1\n1 4 0 1\n"), "--kmax", "4"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  Json const j = Json::parse(r.out);
  EXPECT_EQ(j["result"]["size"], 4);
  EXPECT_EQ(j["result"]["symmetric"], true);
  EXPECT_EQ(j["result"]["generates"], true);
  EXPECT_EQ(j["result"]["ruzsa_holds"], true);
  EXPECT_EQ(j["config"]["kind"], "SL2");

  Result const s = invoke({"growth", "--in", file("s.txt", "SCALAR Q\n1\n2\n3\n")});
  Json const k = Json::parse(s.out);
  EXPECT_EQ(k["result"]["sumset"], 5);
  EXPECT_EQ(k["result"]["product_set"], 6);
}

TEST_F(CliTest, Energy) {
  Result const r = invoke({"energy", "--in", file("a.txt", "SCALAR Q\n1\n2\n3\n"), "--op", "add"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(Json::parse(r.out)["result"]["energy"], "19");
}

TEST_F(CliTest, IncidenceAndDirections) {
  std::string const pts = file("p.txt", "points 5\n0 0\n1 1\n2 2\n");
  Result const inc = invoke({"incidence", "--points", pts, "--lines", file("l.txt", "lines 5\n1 0\n0 0\nV 1\n")});
  ASSERT_EQ(inc.code, kExitOk) << inc.err;
  EXPECT_EQ(Json::parse(inc.out)["result"]["incidences"], 5);

  Result const d = invoke({"directions", "--in", pts});
  ASSERT_EQ(d.code, kExitOk);
  EXPECT_NE(d.err.find("points are collinear"), std::string::npos);
  EXPECT_EQ(Json::parse(d.out)["result"]["collinear"], true);
}

TEST_F(CliTest, Diameter) {
  Result const r = invoke({"diameter", "--in", file("g.txt", "SL2 5\n0 4 1 0\n0 1 4 0\n1 1 0 1\n1 4 0 1\n"), "--cross-check"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  Json const j = Json::parse(r.out);
  EXPECT_EQ(j["result"]["diameter"], 9);
  EXPECT_EQ(j["result"]["generated"], true);

  Result const c = invoke({"diameter", "--in", file("u.txt", "SL2 5\n1 1 0 1\n")});
  EXPECT_EQ(c.code, kExitOk);
  EXPECT_NE(c.err.find("do not generate"), std::string::npos);
}

}  // namespace
}  // namespace sumprod::cli
