// Copyright 2026 The Interlace Authors.
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


#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "interlace/cli.hpp"
#include "interlace/generators.hpp"
#include "interlace/io.hpp"

namespace fs = std::filesystem;
using namespace interlace;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("interlace_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  fs::path dir_;
};

const char* kTwoBlocks =
    "election n=4 m=3 k=2\n"
    "candidates: a b dummy\n"
    "v1: a\nv2: a\nv3: b\nv4: b\n";

}  // namespace

TEST_F(CliTest, ScoreSixCycle) {
  const auto file = write("six.txt", render_election(gen_example(2)));
  const auto r = run_cli({"score", file, "c1,c2,c3,c4,c5,c6"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_NE(r.out.find("cons: 15"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("av: 12"), std::string::npos);
  const auto j = run_cli({"score", "--json", file, "{c1, c3, c4, c6, d1, d2}"});
  EXPECT_NE(j.out.find("\"cons\": 6"), std::string::npos) << j.out;
}

TEST_F(CliTest, ScoreEmptyCommittee) {
  const auto file = write("six.txt", render_election(gen_example(2)));
  const auto r = run_cli({"score", file, "{}"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  for (const char* line : {"av: 0\n", "cc: 0\n", "pairs: 0\n", "cons: 0\n", "below k"}) {
    EXPECT_NE(r.out.find(line), std::string::npos) << line << "\n" << r.out;
  }
}

TEST_F(CliTest, DpMatchesBruteOnBlockChain) {
  const auto chain = write("chain.txt", render_election(gen_vi_block_chain(2)));
  const auto dp = run_cli({"solve", chain, "-o", "cons"});
  const auto brute = run_cli({"solve", chain, "-o", "cons", "-m", "brute"});
  ASSERT_EQ(brute.code, cli::kOk) << brute.err;
  EXPECT_NE(brute.out.find("score: cons=36"), std::string::npos) << brute.out;
  EXPECT_NE(dp.out.find("score: cons=36"), std::string::npos) << dp.out;
}

TEST_F(CliTest, GreedyAvIsTopK) {
  const auto file = write("ex1.txt", render_election(gen_example(1)));
  const auto greedy = run_cli({"solve", file, "-o", "av", "-m", "greedy"});
  const auto brute = run_cli({"solve", file, "-o", "av", "-m", "brute"});
  ASSERT_EQ(greedy.code, cli::kOk) << greedy.err;
  const auto line = [](const std::string& s) {
    const auto at = s.find("score:");
    return s.substr(at, s.find('\n', at) - at);
  };
  EXPECT_EQ(line(greedy.out), line(brute.out));
}

TEST_F(CliTest, ScoreCommitteeFromFile) {
  const auto file = write("six.txt", render_election(gen_example(2)));
  const auto list = write("w.txt", "c1 c2\nc3\n");
  const auto r = run_cli({"score", file, "@" + list});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_NE(r.out.find("committee: {c1, c2, c3}"), std::string::npos) << r.out;
}

TEST_F(CliTest, SolveConsByEveryRoute) {
  const auto file = write("six.txt", render_election(gen_example(2)));
  const auto brute = run_cli({"solve", file, "-o", "cons", "-m", "brute"});
  ASSERT_EQ(brute.code, cli::kOk) << brute.err;
  EXPECT_NE(brute.out.find("score: cons=15"), std::string::npos) << brute.out;
  // No CI order exists, so the exhaustive search reports a domain error.
  EXPECT_EQ(run_cli({"solve", file, "-o", "cons"}).code, cli::kUsage);

  const auto chain = write("chain.txt", render_election(gen_vi_block_chain(2)));
  const auto dp = run_cli({"solve", chain, "--objective", "cons"});
  ASSERT_EQ(dp.code, cli::kOk) << dp.err;
  EXPECT_NE(dp.out.find("score: cons=36"), std::string::npos) << dp.out;
}

TEST_F(CliTest, SolveViaVciRemovesDominated) {
  Instance inst = gen_random(8, 7, 3, RandomDomain::kVCI, 11);
  inst.ci.reset();
  inst.vi.reset();
  const auto file = write("vci.txt", render_election(inst));
  const auto dp = run_cli({"solve", file, "-o", "pairs", "--json"});
  const auto brute = run_cli({"solve", file, "-o", "pairs", "-m", "brute", "--json"});
  ASSERT_EQ(dp.code, cli::kOk) << dp.err;
  ASSERT_EQ(brute.code, cli::kOk) << brute.err;
  auto score_of = [](const std::string& s) {
    const auto p = s.find("\"score\": ");
    return std::stoull(s.substr(p + 9));
  };
  EXPECT_EQ(score_of(dp.out), score_of(brute.out));
}

TEST_F(CliTest, MesHalfBudget) {
  const auto file = write("blocks.txt", kTwoBlocks);
  const auto r = run_cli({"solve", file, "-m", "mes", "--alpha", "0.5"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_NE(r.out.find("committee: {}"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("target 1"), std::string::npos) << r.out;
  const auto shared = write("shared.txt",
                            "election n=4 m=2 k=2\ncandidates: a b\nv1: a\nv2: a\nv3: a b\nv4: a b\n");
  const auto one = run_cli({"solve", shared, "-m", "mes", "--alpha", "1/2"});
  ASSERT_EQ(one.code, cli::kOk) << one.err;
  EXPECT_NE(one.out.find("committee: {a}"), std::string::npos) << one.out;
  EXPECT_NE(one.out.find("round 1: a at price 1/4"), std::string::npos) << one.out;
  EXPECT_EQ(run_cli({"solve", file, "-m", "mes", "--alpha", "2"}).code, cli::kUsage);
}

TEST_F(CliTest, AuditExitCodes) {
  const auto file = write("blocks.txt", kTwoBlocks);
  const auto ok = run_cli({"audit", file, "a,b"});
  EXPECT_EQ(ok.code, cli::kOk);
  EXPECT_NE(ok.out.find("satisfied"), std::string::npos);
  const auto bad = run_cli({"audit", file, "a,dummy"});
  EXPECT_EQ(bad.code, cli::kAuditFailed);
  EXPECT_NE(bad.out.find("violated"), std::string::npos);
  EXPECT_NE(bad.out.find("v3"), std::string::npos) << bad.out;
  EXPECT_EQ(run_cli({"audit", file, "a,dummy", "--alpha", "1/2"}).code, cli::kOk);
}

TEST_F(CliTest, ErrorCodes) {
  const auto bad = write("bad.txt", "election n=1 m=1 k=1\nv1: zz\n");
  const auto r = run_cli({"score", bad, "c1"});
  EXPECT_EQ(r.code, cli::kParse);
  EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;
  EXPECT_EQ(run_cli({}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"frobnicate"}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"gen", "nonsense"}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"tradeoff", "nonsense"}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"--help"}).code, cli::kOk);
  const auto big = write("big.txt", render_election(gen_random(4, 30, 15, RandomDomain::kNone, 1)));
  EXPECT_EQ(run_cli({"solve", big, "-o", "cons", "-m", "brute", "--limit-evals", "1000"}).code,
            cli::kSizeLimit);
}

TEST_F(CliTest, GenRoundTripsThroughScore) {
  const auto path = (dir_ / "bc.txt").string();
  const auto g = run_cli({"gen", "block-central", "--x", "2", "--out", path});
  ASSERT_EQ(g.code, cli::kOk) << g.err;
  const Instance inst = read_election_file(path);
  EXPECT_EQ(inst.election, gen_block_central(2).election);
  const auto json = run_cli({"gen", "random", "--n", "5", "--m", "4", "--k", "2", "--domain", "vi",
                             "--seed", "3", "--json"});
  ASSERT_EQ(json.code, cli::kOk);
  EXPECT_EQ(parse_election_json(json.out).election,
            gen_random(5, 4, 2, RandomDomain::kVI, 3).election);
  const auto x3c = run_cli({"gen", "x3c", "--rho", "2", "--sets", "0 1 2; 3 4 5"});
  ASSERT_EQ(x3c.code, cli::kOk) << x3c.err;
  EXPECT_NE(x3c.out.find("# threshold q="), std::string::npos);
}

TEST_F(CliTest, TradeoffCsv) {
  std::ostringstream out, err;
  const auto r = run_cli({"tradeoff", "block-central", "--x", "2,3", "--max-only"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_EQ(r.out.rfind("alpha,ratio_A,ratio_B,sum\n", 0), 0u);
  EXPECT_NE(r.out.find("# x=3"), std::string::npos);
  EXPECT_NE(r.err.find("max ratio sum"), std::string::npos);
  const auto split = run_cli({"tradeoff", "block-central", "--mode", "split"});
  ASSERT_EQ(split.code, cli::kOk) << split.err;
  EXPECT_NE(split.out.find("0.500000,"), std::string::npos) << split.out;
}
