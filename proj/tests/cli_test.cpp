// Copyright 2026 The gf2perm Authors.
//
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

#include "gf2perm/cli.hpp"

#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace gf2perm {
namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "gf2perm");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

// Splits a printed replay line the way a POSIX shell would for our quoting.
std::vector<std::string> shell_words(const std::string& line) {
  std::vector<std::string> words;
  std::string cur;
  bool quoted = false;
  bool any = false;
  for (char c : line) {
    if (c == '\'') {
      quoted = !quoted;
      any = true;
    } else if (c == ' ' && !quoted) {
      if (any) words.push_back(cur);
      cur.clear();
      any = false;
    } else {
      cur += c;
      any = true;
    }
  }
  if (any) words.push_back(cur);
  return words;
}

TEST(Cli, EvalExamples) {
  auto r = cli({"eval", "--field", "1:2", "--op", "trace", "--elem", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "\"1\"\n");
  r = cli({"eval", "--field", "1:2", "--op", "charsum", "--poly", "1:2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "-2\n");
  r = cli({"eval", "--field", "1:2", "--op", "permtest", "--monomials", "3:1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_FALSE(nlohmann::json::parse(r.out).at("is_permutation").get<bool>());
  r = cli({"eval", "--field", "1:3", "--op", "prop2", "--elem", "1", "--elem2", "1"});
  EXPECT_EQ(r.out, "-2\n");
  r = cli({"eval", "--field", "2:3", "--op", "pow", "--elem", "0x5", "--exp", "-1"});
  const auto inv = cli({"eval", "--field", "2:3", "--op", "inv", "--elem", "5"});
  EXPECT_EQ(r.out, inv.out);
}

TEST(Cli, GlobalFlagsMayFollowTheSubcommand) {
  const auto a = cli({"--field", "1:2", "eval", "--op", "chi", "--elem", "2"});
  const auto b = cli({"eval", "--op", "chi", "--elem", "2", "--field", "1:2"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, "-1\n");
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli({"eval", "--field", "1:2:0x6", "--op", "trace", "--elem", "1"}).code, 1);
  EXPECT_EQ(cli({"eval", "--field", "1:x", "--op", "trace", "--elem", "1"}).code, 2);
  EXPECT_EQ(cli({"eval", "--field", "1:2", "--op", "bogus", "--elem", "1"}).code, 2);
  EXPECT_EQ(cli({"frobnicate"}).code, 2);
  EXPECT_EQ(cli({}).code, 2);
  EXPECT_EQ(cli({"eval", "--field", "1:2", "--op", "inv", "--elem", "0"}).code, 1);
  EXPECT_EQ(cli({"field-info", "--field", "1:30"}).code, 1);
  EXPECT_EQ(cli({"field-info", "--field", "1:30", "--max-n", "30"}).code, 0);
  EXPECT_EQ(cli({"verify", "--theorem", "nope", "--field", "1:2"}).code, 2);
  const auto parse = cli({"charsum", "--field", "1:2", "--poly", "0:1,zz"});
  EXPECT_EQ(parse.code, 2);
  EXPECT_NE(parse.err.find("offset"), std::string::npos);
  EXPECT_EQ(cli({"--help"}).code, 0);
}

TEST(Cli, FieldInfo) {
  const auto r = cli({"field-info", "--field", "2:3"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("modulus"), "0x43");
  EXPECT_EQ(j.at("q"), 4);
  EXPECT_EQ(j.at("fq_basis").size(), 3u);
}

TEST(Cli, CharsumAndClassify) {
  for (const char* method : {"brute", "fast", "classify"}) {
    const auto r = cli({"charsum", "--field", "1:2", "--poly", "1:2", "--method", method});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j.at("s"), -2) << method;
    EXPECT_EQ(j.at("type"), "minus") << method;
    EXPECT_EQ(j.at("kernel_dim_fq"), 0) << method;
    EXPECT_TRUE(j.at("vanishes").get<bool>()) << method;
  }
  const auto r = cli({"classify", "--field", "1:2", "--poly", "0:1"});
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("s"), 0);
  EXPECT_EQ(j.at("gram"), nlohmann::json::parse(R"([["0","1"],["1","1"]])"));
}

TEST(Cli, PermtestForms) {
  auto r = cli({"permtest", "--field", "1:2", "--form", "thm6", "--poly", "0:1;0:1,1:1", "--method", "structured"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(nlohmann::json::parse(r.out).at("is_permutation").get<bool>());
  r = cli({"permtest", "--field", "1:3", "--form", "thm7", "--poly", "1;0:1"});
  EXPECT_FALSE(nlohmann::json::parse(r.out).at("is_permutation").get<bool>());
  EXPECT_FALSE(nlohmann::json::parse(r.out).at("witness").is_null());
  r = cli({"permtest", "--field", "1:3", "--form", "family", "--poly", "tu:a=1", "--method", "charsum"});
  EXPECT_TRUE(nlohmann::json::parse(r.out).at("is_permutation").get<bool>());
  r = cli({"permtest", "--field", "2:3", "--form", "corollary", "--poly", "1;0;1", "--method", "structured"});
  EXPECT_FALSE(nlohmann::json::parse(r.out).at("is_permutation").get<bool>());
  r = cli({"permtest", "--field", "1:3", "--form", "quadspec", "--poly", "2:1;0:1;0:1", "--method", "quadspec"});
  EXPECT_TRUE(nlohmann::json::parse(r.out).at("is_permutation").get<bool>());
  EXPECT_EQ(nlohmann::json::parse(r.out).at("method"), "quadspec");
}

TEST(Cli, VerifyIsByteReproducible) {
  const std::vector<std::string> args = {"verify", "--theorem", "prop3", "--field", "1:3", "--field", "2:2",
                                         "--samples", "40", "--seed", "5"};
  const auto a = cli(args);
  auto with_jobs = args;
  with_jobs.insert(with_jobs.end(), {"--jobs", "2"});
  const auto b = cli(with_jobs);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j.at("seed"), 5);
  EXPECT_EQ(j.at("mismatches").size(), 0u);
  EXPECT_FALSE(j.contains("wall_time_s"));
}

TEST(Cli, VerifyMismatchesReplay) {
  const auto r = cli({"verify", "--theorem", "thm5", "--field", "1:4", "--k", "1"});
  EXPECT_EQ(r.code, 1);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_FALSE(j.at("mismatches").empty());
  int replayed = 0;
  for (const auto& m : j.at("mismatches")) {
    auto words = shell_words(m.at("replay").get<std::string>());
    ASSERT_EQ(words.at(0), "gf2perm");
    words.erase(words.begin());
    const auto rr = cli(words);
    ASSERT_EQ(rr.code, 0) << rr.err;
    const bool zero = nlohmann::json::parse(rr.out).at("s") == 0;
    EXPECT_EQ(zero ? "true" : "false", m.at("oracle").get<std::string>());
    if (++replayed == 10) break;
  }
}

TEST(Cli, SearchOutputs) {
  auto r = cli({"search", "--field", "1:3", "--template", "abnorm", "--range", "3:3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "a,b,is_permutation,matched_criteria\n");
  r = cli({"search", "--field", "1:2", "--template", "quad2", "--format", "json"});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_FALSE(j.at("rows").empty());
  EXPECT_TRUE(j.at("false_claims").empty());
  r = cli({"search", "--field", "1:3", "--template", "abnorm"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("0,0,true,thm7;family:abnorm\n"), std::string::npos);
}

}  // namespace
}  // namespace gf2perm
