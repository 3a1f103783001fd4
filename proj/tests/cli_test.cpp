// Copyright 2026 The simon-arch Authors.
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


#include "simon/cli.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace simon::cli {
namespace {

namespace fs = std::filesystem;

const std::vector<std::string> kKey = {"--key", "1b1a1918", "13121110",
                                       "0b0a0908", "03020100"};

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = run(args, out, err);
  return {status, out.str(), err.str()};
}

std::vector<std::string> with_key(std::vector<std::string> head,
                                  std::vector<std::string> tail = {}) {
  head.insert(head.end(), kKey.begin(), kKey.end());
  head.insert(head.end(), tail.begin(), tail.end());
  return head;
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("simon_cli_test_" + std::to_string(::testing::UnitTest::GetInstance()
                                                    ->random_seed()) +
             "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }

  std::string write(const std::string& name, const std::string& text) const {
    const fs::path p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string file(const std::string& name) const {
    return (path_ / name).string();
  }

 private:
  fs::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(Encrypt, PublishedVector) {
  const auto r = invoke(with_key({"encrypt"}, {"--block", "656b696c", "20646e75"}));
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_EQ(r.out, "44c8fc20 b9dfa07a\n");
}

TEST(Decrypt, InvertsVector) {
  const auto r = invoke(with_key({"decrypt"}, {"--block", "44C8FC20", "b9dfa07a"}));
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_EQ(r.out, "656b696c 20646e75\n");
}

TEST(Encrypt, UsageErrors) {
  EXPECT_EQ(invoke(with_key({"encrypt"}, {"--block", "656b696c"})).status,
            kExitUsage);
  const auto bad_hex = invoke(with_key({"encrypt"}, {"--block", "656b696g", "0"}));
  EXPECT_EQ(bad_hex.status, kExitUsage);
  EXPECT_TRUE(bad_hex.err.starts_with("error: "));
  EXPECT_TRUE(bad_hex.out.empty());
  EXPECT_EQ(invoke(with_key({"encrypt"}, {"--block", "656b696", "20646e75"}))
                .status,
            kExitUsage);
  EXPECT_EQ(invoke({"encrypt", "--block", "656b696c", "20646e75"}).status,
            kExitUsage);
  EXPECT_EQ(invoke({}).status, kExitUsage);
  EXPECT_EQ(invoke({"frobnicate"}).status, kExitUsage);
}

TEST(Help, ExitsCleanly) {
  const auto r = invoke({"--help"});
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_NE(r.out.find("simulate"), std::string::npos);
}

TEST(ExpandKey, ZeroKey) {
  const auto r = invoke({"expand-key", "--key", "00000000", "00000000",
                         "00000000", "00000000"});
  ASSERT_EQ(r.status, kExitOk);
  EXPECT_TRUE(r.out.starts_with(
      "0: 00000000\n1: 00000000\n2: 00000000\n3: 00000000\n4: fffffffd\n"));
  EXPECT_NE(r.out.find("\n43: e1e4b0af\n"), std::string::npos);
}

TEST(ExpandKey, VectorKeyLastLine) {
  const auto r = invoke(with_key({"expand-key"}));
  ASSERT_EQ(r.status, kExitOk);
  EXPECT_TRUE(r.out.ends_with("\n43: 15df4696\n"));
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 44);
}

TEST(Simulate, UnrolledSingleBlock) {
  TempDir dir;
  const auto blocks = dir.write("blocks.txt", "# vector\n656b696c 20646e75\n");
  const auto r = invoke(
      with_key({"simulate", "--arch", "unrolled"}, {"--blocks", blocks}));
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_EQ(r.out, "44c8fc20 b9dfa07a\nlatency=1 ii=1 preexp=0\n");
}

TEST(Simulate, OuterPipeThreeBlocks) {
  TempDir dir;
  const auto blocks = dir.write(
      "blocks.txt", "656b696c 20646e75\n00000000 00000000\n\n01234567 89abcdef\n");
  const auto r = invoke(
      with_key({"simulate", "--arch", "outer-pipe"}, {"--blocks", blocks}));
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_TRUE(r.out.starts_with("44c8fc20 b9dfa07a\n"));
  EXPECT_TRUE(r.out.ends_with("latency=44 ii=1 preexp=0\n"));
}

TEST(Simulate, IterCacheDecrypt) {
  TempDir dir;
  const auto blocks = dir.write("blocks.txt", "44c8fc20 b9dfa07a\n");
  const auto r = invoke(with_key({"simulate", "--arch", "iter-cache"},
                                 {"--mode", "decrypt", "--blocks", blocks}));
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_EQ(r.out, "656b696c 20646e75\nlatency=45 ii=45 preexp=46\n");
}

TEST(Simulate, WritesSelectedTrace) {
  TempDir dir;
  const auto blocks = dir.write("blocks.txt", "656b696c 20646e75\n");
  const auto trace = dir.file("trace.csv");
  const auto r = invoke(with_key(
      {"simulate", "--arch", "iter-ram"},
      {"--blocks", blocks, "--trace", "round_key,out_valid", "--trace-out",
       trace}));
  ASSERT_EQ(r.status, kExitOk);
  const std::string text = slurp(trace);
  EXPECT_NE(text.find(",round_key,03020100\n"), std::string::npos);
  EXPECT_NE(text.find("46,out_valid,00000001\n"), std::string::npos);
  EXPECT_EQ(text.find("state"), std::string::npos);
}

TEST(Simulate, Errors) {
  TempDir dir;
  const auto blocks = dir.write("blocks.txt", "656b696c 20646e75\n");
  EXPECT_EQ(invoke(with_key({"simulate", "--arch", "warp-drive"},
                            {"--blocks", blocks}))
                .status,
            kExitUsage);
  EXPECT_EQ(invoke(with_key({"simulate", "--arch", "unrolled"},
                            {"--blocks", dir.file("missing.txt")}))
                .status,
            kExitUsage);
  EXPECT_EQ(invoke(with_key({"simulate", "--arch", "unrolled"},
                            {"--blocks", blocks, "--trace", "round_key"}))
                .status,
            kExitUsage);
  const auto bad = dir.write("bad.txt", "656b696c 20646e75\n656b696c\n");
  const auto r = invoke(
      with_key({"simulate", "--arch", "unrolled"}, {"--blocks", bad}));
  EXPECT_EQ(r.status, kExitUsage);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
}

TEST(Verify, SingleArchitecture) {
  const auto r = invoke({"verify", "--arch", "unrolled", "--n", "1", "--seed", "0"});
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_EQ(r.out, "unrolled: pass (1 vectors, seed 0)\n1/1 pass\n");
}

TEST(Verify, AllArchitecturesDeterministic) {
  const std::vector<std::string> args = {"verify", "--arch", "all", "--n", "25",
                                         "--seed", "7"};
  const auto a = invoke(args);
  const auto b = invoke(args);
  EXPECT_EQ(a.status, kExitOk);
  EXPECT_TRUE(a.out.ends_with("8/8 pass\n"));
  EXPECT_TRUE(a.out.starts_with("iter-cache: pass"));
  EXPECT_EQ(a.out, b.out);
}

TEST(Verify, RejectsZeroVectors) {
  EXPECT_EQ(invoke({"verify", "--n", "0"}).status, kExitUsage);
  EXPECT_EQ(invoke({"verify", "--arch", "nope", "--n", "1"}).status, kExitUsage);
}

TEST(PerfReport, BundledInputsText) {
  const auto r =
      invoke({"perf-report", "--inputs", SIMON_DATA_DIR "/spartan6_inputs.csv"});
  ASSERT_EQ(r.status, kExitOk);
  EXPECT_NE(r.out.find("28.816"), std::string::npos);
  EXPECT_NE(r.out.find("5.398†"), std::string::npos);
  EXPECT_NE(r.out.find("416.082"), std::string::npos);
}

TEST(PerfReport, CsvCarriesSameValues) {
  const auto r = invoke({"perf-report", "--inputs",
                         SIMON_DATA_DIR "/spartan6_inputs.csv", "--format", "csv"});
  ASSERT_EQ(r.status, kExitOk);
  std::vector<std::string> ratios;
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  while (std::getline(lines, line)) {
    ratios.push_back(line.substr(line.rfind(',') + 1));
  }
  EXPECT_EQ(ratios, (std::vector<std::string>{"416.082", "1.637", "1.967",
                                              "2.387", "0.162", "28.816",
                                              "5.398†"}));
}

TEST(PerfReport, EmptyAndMalformedFiles) {
  TempDir dir;
  const auto empty = dir.write("empty.csv", "label,area_slices,tclk_ns\n");
  const auto r = invoke({"perf-report", "--inputs", empty, "--format", "csv"});
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_EQ(r.out,
            "label,architecture,throughput_mbps,area_slices,mbps_per_slice\n");

  const auto bad =
      dir.write("bad.csv", "label,area_slices,tclk_ns\niter-ram,105,x\n");
  const auto b = invoke({"perf-report", "--inputs", bad});
  EXPECT_EQ(b.status, kExitUsage);
  EXPECT_NE(b.err.find("line 2"), std::string::npos);
  EXPECT_EQ(invoke({"perf-report", "--inputs", empty, "--format", "xml"}).status,
            kExitUsage);
}

}  // namespace
}  // namespace simon::cli
