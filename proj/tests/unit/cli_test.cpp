// Copyright 2026 The Douglas Authors.
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


#include "douglas/cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "oracles.hpp"

namespace douglas::cli {
namespace {

using Json = nlohmann::json;

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<Json> json_lines(const std::string& text) {
  std::vector<Json> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(Json::parse(line));
  return lines;
}

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("douglas-cli-" + std::to_string(::testing::UnitTest::GetInstance()
                                                   ->random_seed()) +
             "-" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

class CacheEnv {
 public:
  explicit CacheEnv(const std::filesystem::path& dir) {
    ::setenv("DOUGLAS_CACHE_DIR", dir.c_str(), 1);
  }
  ~CacheEnv() { ::unsetenv("DOUGLAS_CACHE_DIR"); }
};

TEST(Cli, CountExamples) {
  EXPECT_EQ(call({"count", "--a", "2", "--d", "4", "--engine", "brute"}).out, "8\n");
  for (const char* engine : {"brute", "condense", "shuffle", "formula"}) {
    const Result r = call({"count", "--a", "7", "--d", "4,2,5,4", "--engine", engine});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "536870912\n") << engine;
  }
  EXPECT_EQ(call({"count", "--a", "4", "--d", "1,2,2,2,1", "--engine", "formula"}).out,
            "4096\n");
}

TEST(Cli, InvalidSpecsExitTwo) {
  const Result black = call({"count", "--a", "1", "--d", "3", "--engine", "formula"});
  EXPECT_EQ(black.code, kInvalidSpec);
  EXPECT_NE(black.err.find("ell-prime on black squares"), std::string::npos);
  EXPECT_TRUE(black.out.empty());
  const Result douglas = call({"count", "--a", "4", "--d", "1,2,2,1", "--engine", "formula"});
  EXPECT_EQ(douglas.code, kInvalidSpec);
  EXPECT_NE(douglas.err.find("ell-prime on black squares"), std::string::npos);
  EXPECT_EQ(call({"count", "--a", "3", "--d", "4"}).code, kInvalidSpec);
  EXPECT_EQ(call({"count", "--a", "0", "--d", "4"}).code, kInvalidSpec);
  EXPECT_EQ(call({"count", "--a", "2"}).code, kInvalidSpec);
  EXPECT_EQ(call({"count", "--a", "2", "--d", "x"}).code, kInvalidSpec);
  EXPECT_EQ(call({"count", "--a", "2", "--d", "4", "--engine", "magic"}).code,
            kInvalidSpec);
  EXPECT_EQ(call({"render", "--a", "1", "--d", "3"}).code, kInvalidSpec);
}

TEST(Cli, SizeLimitExitThree) {
  const Result r = call({"--max-frontier", "3", "count", "--a", "7", "--d",
                         "4,2,5,4", "--engine", "brute"});
  EXPECT_EQ(r.code, kSizeLimit);
  EXPECT_NE(r.err.find("size limit"), std::string::npos);
}

TEST(Cli, SpecFile) {
  TempDir dir;
  const auto file = dir.path() / "spec.json";
  std::ofstream(file) << R"({"a": 7, "d": [4, 2, 5, 4]})";
  EXPECT_EQ(call({"count", "--spec", file.string()}).out, "536870912\n");
  EXPECT_EQ(call({"count", "--spec", (dir.path() / "missing.json").string()}).code,
            kInvalidSpec);
  EXPECT_EQ(call({"count", "--spec", file.string(), "--a", "2"}).code, kInvalidSpec);
}

TEST(Cli, VerifySingle) {
  const Result r = call({"verify", "--a", "7", "--d", "4,2,5,4"});
  EXPECT_EQ(r.code, 0);
  const auto lines = json_lines(r.out);
  ASSERT_EQ(lines.size(), 1u);
  const Json& j = lines[0];
  EXPECT_EQ(j["name"], "D_7(4,2,5,4)");
  EXPECT_EQ(j["spec"]["a"], 7);
  EXPECT_FALSE(j["version"].get<std::string>().empty());
  EXPECT_EQ(j["stats"]["C"], 65);
  for (const char* engine : {"brute", "condense", "shuffle", "formula"}) {
    EXPECT_EQ(j["counts"][engine], "536870912") << engine;
  }
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_FALSE(j.contains("timings"));
  std::set<std::string> names;
  for (const Json& c : j["checks"]) {
    names.insert(c["name"].get<std::string>());
    EXPECT_EQ(c["status"], "pass") << c.dump();
  }
  for (const char* expected : {"engines agree", "S = C - w(w+1)/2", "kuo condensation",
                               "reduction step on AD_3", "I.1: exponent balance",
                               "recurrence I.1: M*M3 = 2*M1*M2"}) {
    EXPECT_TRUE(names.count(expected)) << expected;
  }
}

TEST(Cli, VerifyNotesSkippedBrute) {
  const Result r = call({"--max-frontier", "4", "verify", "--a", "7", "--d", "4,2,5,4"});
  EXPECT_EQ(r.code, 0);
  const Json j = json_lines(r.out).at(0);
  EXPECT_TRUE(j["counts"]["brute"].is_null());
  EXPECT_NE(j["notes"]["brute"].get<std::string>().find("size limit"), std::string::npos);
  EXPECT_EQ(j["counts"]["condense"], "536870912");
}

TEST(Cli, VerifySweep) {
  const Result four = call({"verify", "--sweep", "4"});
  EXPECT_EQ(four.code, 0);
  const auto lines = json_lines(four.out);
  ASSERT_EQ(lines.size(), 8u);
  const Json& summary = lines.back()["summary"];
  EXPECT_EQ(summary["valid"], 7);
  EXPECT_EQ(summary["skipped_invalid"], 42);
  EXPECT_EQ(summary["failed"], 0);

  const Result eight = call({"verify", "--sweep", "8"});
  EXPECT_EQ(eight.code, 0);
  const Json last = json_lines(eight.out).back()["summary"];
  EXPECT_EQ(last["valid"], 127);
  EXPECT_EQ(last["passed"], 127);
  EXPECT_EQ(call({"verify", "--sweep", "8", "--jobs", "3"}).out, eight.out);
}

TEST(Cli, Timings) {
  const Result r = call({"verify", "--a", "2", "--d", "4", "--timings"});
  const Json j = json_lines(r.out).at(0);
  ASSERT_TRUE(j.contains("timings"));
  EXPECT_TRUE(j["timings"].contains("brute_ms"));
  Json stripped = j;
  stripped.erase("timings");
  EXPECT_EQ(stripped.dump(),
            json_lines(call({"verify", "--a", "2", "--d", "4"}).out).at(0).dump());
}

TEST(Cli, Render) {
  EXPECT_EQ(call({"render", "--a", "2", "--d", "4", "--format", "ascii"}).out,
            "  wwbb\nwwbbwwbb\nbbwwbbww\n  bbww\n");
  const Result svg = call({"render", "--a", "7", "--d", "4,2,5,4", "--format", "svg"});
  EXPECT_EQ(svg.code, 0);
  EXPECT_EQ(testing::fnv1a(svg.out), 0x338128c7ba65476dULL);
  const Result overlay =
      call({"render", "--a", "7", "--d", "4,2,5,4", "--format", "svg", "--matching"});
  EXPECT_EQ(overlay.out, call({"render", "--a", "7", "--d", "4,2,5,4", "--format",
                               "svg", "--matching"})
                             .out);
  EXPECT_EQ(testing::fnv1a(overlay.out), 0xc2f353afb74c4dcbULL);
  EXPECT_EQ(call({"render", "--a", "2", "--d", "4", "--matching"}).code, kInvalidSpec);

  TempDir dir;
  const auto file = dir.path() / "d7.svg";
  EXPECT_EQ(call({"render", "--a", "7", "--d", "4,2,5,4", "--format", "svg", "-o",
                  file.string()})
                .code,
            0);
  std::ifstream in(file);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_EQ(text.str(), svg.out);
}

TEST(Cli, Trace) {
  const Result r = call({"trace", "--a", "3", "--d", "3,4"});
  EXPECT_EQ(r.code, 0);
  const auto lines = json_lines(r.out);
  ASSERT_GE(lines.size(), 4u);
  EXPECT_EQ(lines[0]["case"], "I.1");
  EXPECT_EQ(lines[0]["count"], "256");
  EXPECT_EQ(lines[0]["subs"], Json::array({"D_2(1,4)", "D_2(3,2)", "D_1(1,2)"}));
  for (const Json& line : lines) {
    if (line["case"] != "base") EXPECT_TRUE(line["identity_holds"].get<bool>());
    EXPECT_TRUE(line["kuo"]["holds"].get<bool>()) << line.dump();
  }
}

TEST(Cli, Reduce) {
  const Result r = call({"reduce", "--a", "7", "--d", "4,2,5,4", "--check"});
  EXPECT_EQ(r.code, 0);
  const auto lines = json_lines(r.out);
  ASSERT_EQ(lines.size(), 10u);
  EXPECT_EQ(lines[0]["order"], 9);
  EXPECT_EQ(lines[0]["weights_hash"].get<std::string>().size(), 16u);
  EXPECT_EQ(lines.back()["product"], "536870912");
  EXPECT_TRUE(lines.back()["agree"].get<bool>());

  TempDir dir;
  const auto file = dir.path() / "pattern.json";
  std::ofstream(file) << R"({"rows":2,"cols":2,"entries":[["1","2"],["3","4"]]})";
  const Result p = call({"reduce", "--pattern", file.string(), "--order", "3", "--check"});
  EXPECT_EQ(p.code, 0);
  const Json last = json_lines(p.out).back();
  EXPECT_EQ(last["product"], last["direct"]);
  std::ofstream(file) << R"({"rows":2,"cols":2,"entries":[["1","0"],["1","0"]]})";
  EXPECT_EQ(call({"reduce", "--pattern", file.string()}).code, kInvalidSpec);
}

TEST(Cli, Dump) {
  const Json region = Json::parse(call({"dump", "--a", "2", "--d", "4"}).out);
  EXPECT_EQ(region["cells"].size(), 12u);
  const Json graph = Json::parse(call({"dump", "--a", "2", "--d", "4", "--what", "graph"}).out);
  EXPECT_EQ(graph["vertices"].size(), 12u);
  const Json pattern =
      Json::parse(call({"dump", "--a", "2", "--d", "4", "--what", "pattern"}).out);
  EXPECT_EQ(pattern["rows"], 4);
}

TEST(Cli, MemoCache) {
  TempDir dir;
  const CacheEnv env(dir.path());
  EXPECT_EQ(call({"count", "--a", "7", "--d", "4,2,5,4", "--engine", "condense"}).out,
            "536870912\n");
  const auto file = dir.path() / "condensation-memo.jsonl";
  ASSERT_TRUE(std::filesystem::exists(file));
  const auto size = std::filesystem::file_size(file);
  EXPECT_GT(size, 0u);
  {
    std::ofstream append(file, std::ios::app);
    append << "not json\n{\"a\":1}\n";
  }
  EXPECT_EQ(call({"count", "--a", "7", "--d", "4,2,5,4", "--engine", "condense"}).out,
            "536870912\n");
  EXPECT_EQ(std::filesystem::file_size(file), size);
}

TEST(Cli, Usage) {
  EXPECT_EQ(call({}).code, kInvalidSpec);
  const Result help = call({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("verify"), std::string::npos);
  const Result version = call({"--version"});
  EXPECT_EQ(version.code, 0);
  EXPECT_FALSE(version.out.empty());
}

}  // namespace
}  // namespace douglas::cli
