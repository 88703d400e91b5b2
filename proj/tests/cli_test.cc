// Copyright 2026 The qamhls Authors
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

#include "qamhls/cli.h"

#include <fstream>
#include <sstream>

#include "gmock/gmock.h"
#include "gtest/gtest.h"

namespace qamhls {
namespace {

using ::testing::HasSubstr;
using ::testing::MatchesRegex;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun Cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string Data(const std::string& name) {
  return std::string(QAMHLS_DATA_DIR) + "/" + name;
}

std::string WriteTemp(const std::string& name, const std::string& text) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << text;
  return path;
}

std::vector<std::string> ExploreBundled() {
  return {"explore", Data("qam.design"), Data("none.arch"),
          Data("merge_all.arch"), Data("merge_u2.arch"),
          Data("merge_u2_u4.arch")};
}

TEST(CliExploreTest, BundledConfigRows) {
  const CliRun r = Cli(ExploreBundled());
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out,
            "config_id    latency_cycles  latency_ns  mbaud   mbps  rel_area\n"
            "none                     69         690   1.45   8.70     1.000\n"
            "merge_all                35         350   2.86  17.14     1.230\n"
            "merge_u2                 19         190   5.26  31.58     1.461\n"
            "merge_u2_u4              15         150   6.67  40.00     1.551\n");
}

TEST(CliExploreTest, CsvHasSameNumbers) {
  std::vector<std::string> args = ExploreBundled();
  args.push_back("--format");
  args.push_back("csv");
  const CliRun r = Cli(args);
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out,
            "config_id,latency_cycles,latency_ns,mbaud,mbps,rel_area\n"
            "none,69,690,1.45,8.70,1.000\n"
            "merge_all,35,350,2.86,17.14,1.230\n"
            "merge_u2,19,190,5.26,31.58,1.461\n"
            "merge_u2_u4,15,150,6.67,40.00,1.551\n");
}

TEST(CliExploreTest, ClockOverrideAndTarget) {
  const CliRun r = Cli({"explore", Data("qam.design"), Data("merge_u2.arch"),
                     "--clock", "5", "--target-mbps", "60", "--format", "csv"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_THAT(r.out, HasSubstr("merge_u2,19,95,10.53,63.16,1.461,yes"));
}

TEST(CliExploreTest, UnnamedArchUsesFileStem) {
  const std::string arch = WriteTemp("my_config.arch", "merge ffe dfe\n");
  const CliRun r = Cli({"explore", Data("qam.design"), arch, "--format", "csv"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_THAT(r.out, HasSubstr("my_config,61,"));
}

TEST(CliExploreTest, InputErrors) {
  CliRun r = Cli({"explore", Data("no_such.design"), Data("merge_all.arch")});
  EXPECT_EQ(r.code, kExitInputError);
  EXPECT_THAT(r.err, HasSubstr("no_such.design"));

  const std::string bad = WriteTemp("bad.arch", "merge ffe\nunroll dfe 0\n");
  r = Cli({"explore", Data("qam.design"), bad});
  EXPECT_EQ(r.code, kExitInputError);
  EXPECT_THAT(r.err, HasSubstr("bad.arch: line 2"));

  const std::string unknown = WriteTemp("unknown.arch", "unroll zzz 2\n");
  EXPECT_EQ(Cli({"explore", Data("qam.design"), unknown}).code,
            kExitInputError);
  EXPECT_EQ(Cli({"explore", Data("qam.design"), Data("merge_all.arch"),
                 "--clock", "-1"})
                .code,
            kExitInputError);
  EXPECT_EQ(Cli({"explore", Data("qam.design"), Data("merge_all.arch"),
                 "--format", "xml"})
                .code,
            kExitInputError);
  EXPECT_EQ(Cli({"explore", Data("qam.design")}).code, kExitInputError);

  const std::string piped =
      WriteTemp("piped.arch", "merge ffe dfe\npipeline dfe ii=1 depth=2\n");
  r = Cli({"explore", Data("qam.design"), piped});
  EXPECT_EQ(r.code, kExitInputError);
  EXPECT_THAT(r.err, HasSubstr("merged group"));
}

TEST(CliExploreTest, OutFile) {
  const std::string path = ::testing::TempDir() + "explore_out.csv";
  std::vector<std::string> args = ExploreBundled();
  args.insert(args.end(), {"--format", "csv", "--out", path});
  const CliRun r = Cli(args);
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "");
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_THAT(ss.str(), HasSubstr("merge_u2_u4,15,150,6.67,40.00,1.551"));
}

TEST(CliSimulateTest, SameSeedIsByteIdentical) {
  const CliRun a = Cli({"simulate", Data("hard_channel.trial")});
  const CliRun b = Cli({"simulate", Data("hard_channel.trial")});
  EXPECT_EQ(a.out, b.out);
  EXPECT_FALSE(a.out.empty());
}

TEST(CliSimulateTest, HardChannelWithoutTrainingFailsDemand) {
  const CliRun r = Cli({"simulate", Data("hard_channel.trial")});
  EXPECT_EQ(r.code, kExitNotConverged);
  EXPECT_THAT(r.err, HasSubstr("not converged"));
  EXPECT_THAT(r.out, HasSubstr("converged false"));
}

TEST(CliSimulateTest, NoDemandExitsZero) {
  const std::string trial = WriteTemp(
      "loose.trial", "taps 1\nseed 3\nmeasure 300\nrequire_converged false\n");
  const CliRun r = Cli({"simulate", trial, "--format", "csv"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_THAT(r.out, HasSubstr("block_index,mse,cumulative_errors\n"));
  EXPECT_THAT(r.out, HasSubstr("# ser="));
}

TEST(CliSimulateTest, ReferenceDecoderOption) {
  const std::string trial =
      WriteTemp("ref.trial", "taps 1\nseed 3\ntrain 50\nmeasure 100\n");
  const CliRun r = Cli({"simulate", trial, "--reference"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_THAT(r.out, HasSubstr("symbol_errors"));
}

TEST(CliSimulateTest, InputErrors) {
  EXPECT_EQ(Cli({"simulate", Data("missing.trial")}).code, kExitInputError);
  const std::string hot = WriteTemp("hot.trial", "taps 1.2; 1.2\n");
  const CliRun r = Cli({"simulate", hot});
  EXPECT_EQ(r.code, kExitInputError);
  EXPECT_THAT(r.err, HasSubstr("worst-case"));
}

// Calibration scenario; see the channel_sim tests for the thresholds.
TEST(CliSimulateTest, ScenarioSConverges) {
  const CliRun r = Cli({"simulate", Data("scenario_s.trial")});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_THAT(r.out, HasSubstr("ser 0.000000  converged true"));
}

TEST(CliWidthsTest, BundledExamples) {
  CliRun r = Cli({"widths", Data("fig2_counter.expr"), "--format", "csv"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, "depth,node,lo,hi,signed,width\n0,range i 0 1023,0,1023,0,10\n");
  r = Cli({"widths", Data("int17_cast.expr")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const std::string first_row = r.out.substr(r.out.find('\n') + 1);
  EXPECT_THAT(first_row.substr(0, first_row.find('\n')),
              MatchesRegex("cast s17 +\\[-65536, 65535\\] +yes +17"));
}

TEST(CliWidthsTest, MalformedExpression) {
  const std::string bad = WriteTemp("bad.expr", "(add (range a 0 1)\n");
  const CliRun r = Cli({"widths", bad});
  EXPECT_EQ(r.code, kExitInputError);
  EXPECT_THAT(r.err, HasSubstr("bad.expr"));
}

TEST(CliTest, UsageErrorsAndHelp) {
  EXPECT_EQ(Cli({}).code, kExitInputError);
  EXPECT_EQ(Cli({"transmogrify"}).code, kExitInputError);
  const CliRun help = Cli({"--help"});
  EXPECT_EQ(help.code, kExitOk);
  EXPECT_THAT(help.out, HasSubstr("explore"));
}

}  // namespace
}  // namespace qamhls
