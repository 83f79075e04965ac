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

#include "comine/miner.h"

#include <algorithm>
#include <sstream>

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
using testing::E;
using testing::F;
using testing::MakeGraph;
using testing::MakeMotif;
using testing::WalkthroughGroup;

std::uint64_t Count(const TemporalGraph& g, const Motif& m, Timestamp delta) {
  return MineSingle(g, m, delta, MineMode::kCount).counts.at(0);
}

const Motif kTriangle = MakeMotif("tri", {{0, 1}, {1, 2}, {2, 0}});
const Motif kPath = MakeMotif("path", {{0, 1}, {1, 2}});

TEST(MineSingle, EmptyGraph) {
  EXPECT_EQ(Count(MakeGraph({}), kTriangle, 10), 0u);
}

TEST(MineSingle, SingleEdgeMotifMatchesEveryNonLoopEdge) {
  TemporalGraph g =
      MakeGraph({{A, B, 1}, {B, A, 1}, {C, C, 2}, {A, D, 9}, {A, B, 100}});
  Motif edge = MakeMotif("e", {{0, 1}});
  for (Timestamp delta : {1, 5, 1000}) EXPECT_EQ(Count(g, edge, delta), 4u);
}

// Frozen values below were computed with BruteForceCount.
TEST(MineSingle, TriangleWindow) {
  TemporalGraph g = MakeGraph({{A, B, 1}, {B, C, 2}, {C, A, 3}});
  EXPECT_EQ(Count(g, kTriangle, 30), 1u);
  EXPECT_EQ(Count(g, kTriangle, 2), 1u);
  EXPECT_EQ(Count(g, kTriangle, 1), 0u);
}

TEST(MineSingle, InjectivityRejectsReturningPath) {
  // A->B, B->A would map motif vertices 0 and 2 onto A.
  TemporalGraph g = MakeGraph({{A, B, 1}, {B, A, 2}, {B, C, 3}});
  EXPECT_EQ(Count(g, kPath, 10), 1u);
  auto m = MineSingle(g, kPath, 10, MineMode::kEnumerate);
  ASSERT_EQ(m.matches[0].size(), 1u);
  EXPECT_EQ(m.matches[0][0], (Match{0, 2}));
}

TEST(MineSingle, PathFanOut) {
  TemporalGraph g = MakeGraph({{A, B, 1}, {B, C, 2}, {B, D, 3}});
  EXPECT_EQ(Count(g, kPath, 10), 2u);
  EXPECT_EQ(Count(g, kPath, 1), 1u);
}

TEST(MineSingle, EqualTimestampsFollowInputOrder) {
  TemporalGraph g = MakeGraph({{A, B, 5}, {B, C, 5}});
  EXPECT_EQ(Count(g, kPath, 1), 1u);
  TemporalGraph h = MakeGraph({{B, C, 5}, {A, B, 5}});
  EXPECT_EQ(Count(h, kPath, 1), 0u);
}

TEST(MineSingle, AgreesWithOracleOnRandomInstances) {
  Rng rng(101);
  for (int i = 0; i < 120; ++i) {
    TemporalGraph g = BuildIndexedGraph(RandomEdges(rng, 8, 60, 40));
    Motif m = RandomMotif(rng, 4, 4, "m");
    Timestamp delta = std::uniform_int_distribution<Timestamp>(1, 30)(rng);
    auto got = MineSingle(g, m, delta, MineMode::kEnumerate);
    auto want = BruteForceEnumerate(g, m, delta, true);
    EXPECT_EQ(got.counts[0], want.size()) << m.EdgeString() << " δ=" << delta;
    EXPECT_EQ(got.matches[0], want);
  }
}

TEST(CoMine, WalkthroughCounts) {
  TemporalGraph g =
      MakeGraph({{A, B, 1}, {B, C, 2}, {C, A, 3}, {C, D, 4}, {D, A, 5}});
  MGTree tree = ConstructMGTree(WalkthroughGroup());
  MatchResult r = CoMine(g, tree, 100, MineMode::kEnumerate);
  EXPECT_EQ(r.names, (std::vector<std::string>{"M3", "M4", "M5"}));
  EXPECT_EQ(r.counts, (std::vector<std::uint64_t>{1, 1, 0}));
  EXPECT_EQ(r.matches[0], (std::vector<Match>{{0, 1, 2}}));
  EXPECT_EQ(r.matches[1], (std::vector<Match>{{0, 1, 3, 4}}));
  EXPECT_TRUE(r.matches[2].empty());

  MatchResult ind = MineIndividually(g, WalkthroughGroup(), 100, MineMode::kCount);
  EXPECT_EQ(ind.counts, r.counts);
  EXPECT_LT(r.stats.visits, ind.stats.visits);
}

TEST(CoMine, SingleMotifTreeEqualsMineSingle) {
  TemporalGraph g = BuildIndexedGraph(GenerateSynthetic(SyntheticMode::kUniform, 20, 300, 3, 200));
  for (const Motif& m : WalkthroughGroup()) {
    MatchResult a = MineSingle(g, m, 40, MineMode::kCount);
    MatchResult b = CoMine(g, ConstructMGTree({m}), 40, MineMode::kCount);
    EXPECT_EQ(a.counts, b.counts);
    EXPECT_EQ(a.stats.visits, b.stats.visits);
    EXPECT_EQ(a.stats.expansions, b.stats.expansions);
  }
}

TEST(CoMine, MatchesIndividualMiningOnRandomGroups) {
  Rng rng(202);
  for (int i = 0; i < 80; ++i) {
    TemporalGraph g = BuildIndexedGraph(RandomEdges(rng, 10, 120, 60));
    auto group = RandomGroup(rng, static_cast<GroupShape>(i % 3), 2 + i % 5, 4);
    Timestamp delta = std::uniform_int_distribution<Timestamp>(1, 40)(rng);
    MGTree tree = ConstructMGTree(group);
    MatchResult co = CoMine(g, tree, delta, MineMode::kEnumerate);
    MatchResult ind = MineIndividually(g, group, delta, MineMode::kEnumerate);
    ASSERT_EQ(co.counts, ind.counts) << "instance " << i;
    EXPECT_EQ(co.matches, ind.matches);
    EXPECT_LE(co.stats.visits, ind.stats.visits);
    // Node visit table adds up to the total.
    std::uint64_t sum = 0;
    for (NodeIndex n = 0; n < tree.node_count(); ++n) sum += co.stats.NodeTotal(n);
    EXPECT_EQ(sum, co.stats.visits);
  }
}

TEST(CoMine, CountsAreMonotoneInDelta) {
  TemporalGraph g = BuildIndexedGraph(GenerateSynthetic(SyntheticMode::kBurst, 15, 400, 9, 500));
  MGTree tree = ConstructMGTree(WalkthroughGroup());
  std::vector<std::uint64_t> prev(3, 0);
  for (Timestamp delta : {1, 5, 20, 50, 200, 1000}) {
    auto r = CoMine(g, tree, delta, MineMode::kCount);
    for (std::size_t i = 0; i < 3; ++i) EXPECT_GE(r.counts[i], prev[i]);
    prev = r.counts;
  }
}

TEST(CoMine, BipartiteGraphPrunesOddCycleSubtree) {
  // Y needs a 3-path; the shared node (ab, bc, ca) needs a triangle.
  std::vector<Motif> group = {
      MakeMotif("Y", {{0, 1}, {1, 2}, {2, 3}}),
      MakeMotif("A", {{0, 1}, {1, 2}, {2, 0}, {0, 3}}),
      MakeMotif("B", {{0, 1}, {1, 2}, {2, 0}, {3, 0}}),
  };
  // Left {A, C, E}, right {B, D, F}.
  TemporalGraph g = MakeGraph({{A, B, 1}, {B, C, 2}, {C, D, 3}, {D, E, 4},
                               {E, F, 5}, {F, A, 6}, {A, D, 7}, {C, F, 8}});
  ASSERT_TRUE(DetectBipartite(g).has_value());
  MGTree tree = ConstructMGTree(group);
  MatchResult r = CoMine(g, tree, 100, MineMode::kCount);
  EXPECT_GT(r.counts[0], 0u);
  EXPECT_EQ(r.counts[1], 0u);
  EXPECT_EQ(r.counts[2], 0u);
  // The triangle node is visited at rank 2 but never gets past it.
  NodeIndex tri = tree.nodes[tree.root].children[1];
  ASSERT_EQ(tree.nodes[tri].common.size(), 3u);
  EXPECT_GT(r.stats.node_visits[tri][2], 0u);
  for (NodeIndex c : tree.nodes[tri].children) {
    EXPECT_EQ(r.stats.NodeTotal(c), 0u);
  }
}

class CollectSink : public MatchSink {
 public:
  void OnMatch(std::size_t motif, std::span<const EdgeId> edges) override {
    got.emplace_back(motif, Match(edges.begin(), edges.end()));
  }
  std::vector<std::pair<std::size_t, Match>> got;
};

TEST(CoMine, SinkReceivesMatchesInsteadOfResult) {
  TemporalGraph g =
      MakeGraph({{A, B, 1}, {B, C, 2}, {C, A, 3}, {C, D, 4}, {D, A, 5}});
  CollectSink sink;
  MatchResult r = CoMine(g, ConstructMGTree(WalkthroughGroup()), 100,
                         MineMode::kEnumerate, &sink);
  EXPECT_EQ(r.counts, (std::vector<std::uint64_t>{1, 1, 0}));
  ASSERT_EQ(sink.got.size(), 2u);
  EXPECT_EQ(sink.got[0].first, 0u);
  EXPECT_TRUE(r.matches.empty() || r.matches[0].empty());

  std::ostringstream line;
  WriteMatchLine(line, "M4", sink.got[1].second);
  EXPECT_EQ(line.str(), "M4: 0,1,3,4\n");
}

TEST(MatchResult, MergeAddsCountsAndConcatenates) {
  std::vector<Motif> ms = {kPath, kTriangle};
  MatchResult a, b;
  a.Init(ms, MineMode::kEnumerate);
  b.Init(ms, MineMode::kEnumerate);
  a.counts = {1, 0};
  a.matches[0] = {{3, 4}};
  b.counts = {1, 1};
  b.matches[0] = {{1, 2}};
  b.matches[1] = {{0, 1, 2}};
  a.Merge(std::move(b));
  a.SortMatches();
  EXPECT_EQ(a.counts, (std::vector<std::uint64_t>{2, 1}));
  EXPECT_EQ(a.matches[0], (std::vector<Match>{{1, 2}, {3, 4}}));
  EXPECT_EQ(a.total_count(), 3u);
}

}  // namespace
}  // namespace comine
