// Copyright 2026 The comine Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "comine/cli.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "comine/miner.h"
#include "comine/mgtree.h"
#include "gtest/gtest.h"

namespace comine {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("comine_cli_" + std::string(::testing::UnitTest::GetInstance()
                                            ->current_test_info()
                                            ->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Write(const std::string& name, const std::string& text) {
    fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  int Run(std::vector<std::string> args) {
    args.insert(args.begin(), "comine");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    out_.str("");
    err_.str("");
    return RunCli(static_cast<int>(argv.size()), argv.data(), out_, err_, hooks_);
  }

  std::string Read(const std::string& name) {
    std::ifstream f(dir_ / name);
    std::stringstream s;
    s << f.rdbuf();
    return s.str();
  }

  std::string WalkthroughQuery() {
    Write("walk.txt", "A B 1\nB C 2\nC A 3\nC D 4\nD A 5\n");
    return Write("walk.q",
                 "graph walk.txt\ndelta 100\n"
                 "motif M3\nedge a b\nedge b c\nedge c a\nend\n"
                 "motif M4\nedge a b\nedge b c\nedge c d\nedge d a\nend\n"
                 "motif M5\nedge a b\nedge b c\nedge c d\nedge a d\nend\n");
  }

  fs::path dir_;
  std::ostringstream out_, err_;
  const CliHooks* hooks_ = nullptr;
};

TEST_F(CliTest, MineSingleEdgeMotif) {
  Write("g.txt", "a b 1\nb c 2\nc a 3\n");
  std::string q = Write("q.txt", "graph g.txt\ndelta 10\nmotif m1\nedge x y\nend\n");
  std::string out = (dir_ / "out").string();
  ASSERT_EQ(Run({"mine", "--query", q, "--out", out}), kExitOk) << err_.str();
  EXPECT_EQ(out_.str(), "m1\t3\n");
  EXPECT_EQ(Read("out/counts.tsv"), "m1\t3\n");
  auto j = nlohmann::json::parse(Read("out/result.json"));
  EXPECT_EQ(j["motifs"][0]["name"], "m1");
  EXPECT_EQ(j["motifs"][0]["count"], 3);
  EXPECT_EQ(j["delta_ticks"], 10);
  EXPECT_TRUE(j["motifs"][0]["matches_file"].is_null());
  EXPECT_TRUE(j.contains("heuristic"));
  EXPECT_TRUE(j["stats"].contains("visits"));
}

TEST_F(CliTest, EnumerateWritesMatchFiles) {
  std::string q = WalkthroughQuery();
  std::string out = (dir_ / "out").string();
  ASSERT_EQ(Run({"mine", "--query", q, "--mode", "enumerate", "--threads", "3",
                 "--balance", "context_split", "--out", out}),
            kExitOk)
      << err_.str();
  EXPECT_EQ(out_.str(), "M3\t1\nM4\t1\nM5\t0\n");
  EXPECT_EQ(Read("out/matches_M3.txt"), "M3: 0,1,2\n");
  EXPECT_EQ(Read("out/matches_M4.txt"), "M4: 0,1,3,4\n");
  EXPECT_EQ(Read("out/matches_M5.txt"), "");
}

TEST_F(CliTest, ForceFlagsChangeWorkNotCounts) {
  std::string q = WalkthroughQuery();
  ASSERT_EQ(Run({"mine", "--query", q, "--force-comine", "--out", (dir_ / "co").string()}),
            kExitOk);
  ASSERT_EQ(Run({"mine", "--query", q, "--force-individual", "--out",
                 (dir_ / "ind").string()}),
            kExitOk);
  auto co = nlohmann::json::parse(Read("co/result.json"));
  auto ind = nlohmann::json::parse(Read("ind/result.json"));
  EXPECT_EQ(co["strategy"], "co_mine");
  EXPECT_EQ(ind["strategy"], "individual");
  EXPECT_EQ(co["forced"], true);
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(co["motifs"][i]["count"], ind["motifs"][i]["count"]);
  }
  EXPECT_LT(co["stats"]["visits"].get<int>(), ind["stats"]["visits"].get<int>());
  EXPECT_NE(Run({"mine", "--query", q, "--force-comine", "--force-individual"}), kExitOk);
}

TEST_F(CliTest, ErrorExitCodes) {
  std::string missing = Write("m.q", "graph nope.txt\ndelta 1\nmotif m\nedge a b\nend\n");
  EXPECT_EQ(Run({"mine", "--query", missing, "--out", dir_.string()}), kExitGraphError);
  std::string bad = Write("b.q", "delta 1\nmotif m\nedge a a\nend\n");
  EXPECT_EQ(Run({"mine", "--query", bad}), kExitQueryError);
  EXPECT_NE(err_.str().find("line 3"), std::string::npos) << err_.str();
  EXPECT_EQ(Run({"mine", "--query", (dir_ / "absent.q").string()}), kExitQueryError);
  Write("g.txt", "a b 1\nb c\n");
  std::string badg = Write("g.q", "graph g.txt\ndelta 1\nmotif m\nedge a b\nend\n");
  EXPECT_EQ(Run({"mine", "--query", badg}), kExitGraphError);
  Write("ok.txt", "a b 1\n");
  std::string ok = Write("ok.q", "graph ok.txt\ndelta 1\nmotif m\nedge a b\nend\n");
  Write("blocker", "x");
  EXPECT_EQ(Run({"mine", "--query", ok, "--out", (dir_ / "blocker" / "sub").string()}),
            kExitOutputError);
}

TEST_F(CliTest, PlanPrintsTreeAndDecision) {
  std::string q = WalkthroughQuery();
  ASSERT_EQ(Run({"plan", "--query", q, "--dot", "-"}), kExitOk) << err_.str();
  const std::string s = out_.str();
  EXPECT_NE(s.find("#0 [0->1 1->2]"), std::string::npos);
  EXPECT_NE(s.find("similarity: 0.454545"), std::string::npos);
  EXPECT_NE(s.find("\"decision\":\"co_mine\""), std::string::npos);
  EXPECT_NE(s.find("digraph mgtree {"), std::string::npos);
  EXPECT_NE(s.find("branch x2"), std::string::npos);
}

TEST_F(CliTest, VerifyFuzzAndQuery) {
  EXPECT_EQ(Run({"verify", "--fuzz", "40", "--seed", "3"}), kExitOk) << out_.str();
  EXPECT_NE(out_.str().find("ok: 40"), std::string::npos);
  EXPECT_EQ(Run({"verify", "--query", WalkthroughQuery()}), kExitOk);
}

TEST_F(CliTest, VerifyReportsPlantedBug) {
  CliHooks hooks;
  hooks.miner = [](const TemporalGraph& g, const std::vector<Motif>& motifs,
                   Timestamp delta) {
    auto counts = CoMine(g, ConstructMGTree(motifs), delta, MineMode::kCount).counts;
    for (auto& c : counts) c += c > 0 ? 1 : 0;
    return counts;
  };
  hooks_ = &hooks;
  EXPECT_EQ(Run({"verify", "--fuzz", "50", "--seed", "2"}), kExitFailure);
  EXPECT_NE(out_.str().find("witness"), std::string::npos);
  EXPECT_EQ(Run({"verify", "--query", WalkthroughQuery()}), kExitFailure);
  EXPECT_NE(out_.str().find("mismatch on motif 'M3'"), std::string::npos);
}

TEST_F(CliTest, VerifyGuard) {
  std::string edges;
  for (int i = 0; i < 501; ++i) {
    edges += std::to_string(i % 17) + " " + std::to_string((i * 7 + 3) % 17) +
             " " + std::to_string(i * 100) + "\n";
  }
  Write("big.txt", edges);
  std::string q = Write("big.q",
                        "graph big.txt\ndelta 50\n"
                        "motif sq\nedge a b\nedge b c\nedge c d\nedge d a\nend\n");
  EXPECT_EQ(Run({"verify", "--query", q}), kExitGuardError);
  EXPECT_EQ(Run({"verify", "--query", q, "--allow-large"}), kExitOk) << out_.str();
}

TEST_F(CliTest, BenchWritesCsv) {
  std::string q = Write("b.q",
                        "delta 50\n"
                        "motif A\nedge a b\nedge b c\nedge c a\nend\n"
                        "motif B\nedge a b\nedge b c\nedge c d\nend\n");
  std::string out = (dir_ / "bench").string();
  ASSERT_EQ(Run({"bench", "--query", q, "--synthetic", "burst", "--vertices", "30",
                 "--edges", "500", "--delta-mult", "1/4,1,4", "--workers", "1,2",
                 "--repeat", "3", "--out", out}),
            kExitOk)
      << err_.str();
  std::string csv = Read("bench/bench.csv");
  EXPECT_EQ(csv.rfind("delta_mult,workers,mode,wall_ms,visits,speedup", 0), 0u);
  std::size_t lines = 0;
  for (char c : csv) lines += c == '\n';
  EXPECT_EQ(lines, 1u + 3u * 2u * 2u);
  EXPECT_NE(csv.find("1/4,2,co_mine,"), std::string::npos);
}

}  // namespace
}  // namespace comine
