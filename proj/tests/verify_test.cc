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

#include "comine/verify.h"

#include <sstream>

#include "comine/miner.h"
#include "comine/oracle.h"
#include "comine/synthetic.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace comine {
namespace {

using testing::A;
using testing::B;
using testing::C;
using testing::D;
using testing::MakeMotif;

// Miner with a planted off-by-one: the window is treated as open.
MinerFn ShortWindowMiner() {
  return [](const TemporalGraph& g, const std::vector<Motif>& motifs,
            Timestamp delta) {
    return CoMine(g, ConstructMGTree(motifs), delta - 1, MineMode::kCount).counts;
  };
}

TEST(Fuzz, CorrectMinerAgrees) {
  FuzzOptions o;
  o.instances = 60;
  o.seed = 5;
  FuzzReport r = Fuzz(o, DefaultMiner());
  EXPECT_EQ(r.instances, 60u);
  EXPECT_FALSE(r.first.has_value());
}

TEST(Fuzz, PlantedBugIsReportedWithSeed) {
  FuzzOptions o;
  o.instances = 200;
  o.seed = 5;
  FuzzReport r = Fuzz(o, ShortWindowMiner());
  ASSERT_TRUE(r.first.has_value());
  EXPECT_NE(r.first->seed, 0u);
  EXPECT_NE(r.first->expected, r.first->actual);
}

TEST(VerifyInstance, WitnessIsMinimal) {
  // Two-edge path exactly δ apart plus noise.
  std::vector<RawEdge> edges = {{A, B, 0}, {B, C, 10}, {C, D, 3},
                                {D, A, 7}, {B, D, 30}, {A, C, 11}};
  Motif path = MakeMotif("path", {{0, 1}, {1, 2}});
  MinerFn bad = ShortWindowMiner();
  auto m = VerifyInstance(edges, {path}, 10, bad);
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(m->motif, "path");
  // Dropping any witness edge hides the bug.
  for (std::size_t i = 0; i < m->witness.size(); ++i) {
    std::vector<RawEdge> fewer = m->witness;
    fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(i));
    TemporalGraph g = BuildIndexedGraph(fewer);
    EXPECT_EQ(bad(g, {path}, 10)[0], BruteForceCount(g, path, 10));
  }
  EXPECT_EQ(m->witness.size(), 2u);

  std::ostringstream text;
  PrintMismatch(text, *m);
  EXPECT_NE(text.str().find("mismatch on motif 'path'"), std::string::npos);
  EXPECT_NE(text.str().find("witness (2 edges)"), std::string::npos);

  auto full = VerifyInstance(edges, {path}, 10, bad, /*shrink=*/false);
  ASSERT_TRUE(full.has_value());
  EXPECT_EQ(full->witness.size(), edges.size());
}

TEST(VerifyInstance, CorrectMinerPasses) {
  Rng rng(8);
  std::vector<RawEdge> edges = RandomEdges(rng, 6, 80, 50);
  EXPECT_FALSE(VerifyInstance(edges, testing::WalkthroughGroup(), 20,
                              DefaultMiner()).has_value());
}

TEST(VerifyInstance, GuardRefusesOversizedInput) {
  Rng rng(8);
  std::vector<RawEdge> edges = RandomEdges(rng, 30, 600, 100000, 0.0);
  std::vector<Motif> four = {MakeMotif("sq", {{0, 1}, {1, 2}, {2, 3}, {3, 0}})};
  EXPECT_THROW(VerifyInstance(edges, four, 5, DefaultMiner()), OracleGuardError);
  EXPECT_FALSE(VerifyInstance(edges, four, 5, DefaultMiner(), true, true).has_value());
}

}  // namespace
}  // namespace comine
