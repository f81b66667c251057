// Copyright 2026 The dgdd Authors
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
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "dgdd/builtins.hpp"
#include "dgdd/io.hpp"

namespace dgdd::cli {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_dir() {
  const auto dir = std::filesystem::temp_directory_path() /
                   ("dgdd_cli_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()));
  std::filesystem::create_directories(dir);
  return dir;
}

TEST(Cli, DiameterOfBuiltin) {
  const CliRun r = invoke({"diameter", "alegre"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "diameter 4\n");
}

TEST(Cli, RecordsFormat) {
  const CliRun r = invoke({"--format", "records", "diameter", "kautz", "--d", "2", "--D", "3"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "diameter=3 n=12 d=2\n");
}

TEST(Cli, CoverGroupSummary) {
  const CliRun r = invoke({"cover-group", "alegre", "--a", "5", "--b", "5"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out.rfind("order 187500 diameter 23 extremal 11\n", 0), 0u);
  EXPECT_NE(r.out.find("distance 23 count 11"), std::string::npos);
  EXPECT_NE(r.out.find("divides a!(b!)^a: yes"), std::string::npos);
}

TEST(Cli, CoverGroupCapIsResourceExit) {
  const CliRun r = invoke({"--max-elems", "1000", "cover-group", "alegre"});
  EXPECT_EQ(r.code, kResourceCap);
  EXPECT_NE(r.out.find("incomplete"), std::string::npos);
}

TEST(Cli, FactorizeRoundTrip) {
  const auto dir = temp_dir();
  const auto prefix = (dir / "alegre").string();
  ASSERT_EQ(invoke({"build", "alegre", "-o", prefix}).code, kOk);
  const CliRun f = invoke({"factorize", prefix + ".dg"});
  ASSERT_EQ(f.code, kOk);
  std::istringstream lines(f.out);
  std::string a;
  std::string b;
  std::getline(lines, a);
  std::getline(lines, b);
  const Factorization fac{{parse_cycles(a, 25), parse_cycles(b, 25)}};
  EXPECT_TRUE(is_factorization_of(fac, alegre()));
  EXPECT_EQ(invoke({"diameter", prefix + ".fac"}).out, "diameter 4\n");
  std::filesystem::remove_all(dir);
}

TEST(Cli, CddCommand) {
  const CliRun r = invoke({"cdd", "--a", "5", "--b", "5", "--pi", "(0,2,4)", "--t", "1,4,4,1,4"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("diameter 4"), std::string::npos);
}

TEST(Cli, SearchCommand) {
  const CliRun r = invoke({"search", "--n", "6", "--diameter", "2"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("classes=3"), std::string::npos);
}

TEST(Cli, VerifySelection) {
  const CliRun r = invoke({"verify", "--only", "example9"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("[pass] example9.group"), std::string::npos);
  EXPECT_NE(r.out.find("fail=0"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({"diameter"}).code, kUsage);
  EXPECT_EQ(invoke({"no-such-command"}).code, kUsage);
  EXPECT_EQ(invoke({"diameter", "no-such-builtin"}).code, kUsage);
  EXPECT_EQ(invoke({"verify", "--only", "bogus"}).code, kUsage);
  EXPECT_EQ(invoke({"--help"}).code, kOk);
}

TEST(Cli, ParseErrorReportsLine) {
  const auto dir = temp_dir();
  const auto path = dir / "bad.dg";
  std::ofstream(path) << "3 2\n1 2\n2 x\n0 1\n";
  const CliRun r = invoke({"diameter", path.string()});
  EXPECT_EQ(r.code, kUsage);
  EXPECT_NE(r.err.find("line 3"), std::string::npos);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace dgdd::cli
