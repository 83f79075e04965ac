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

#include "comine/runtime.h"

#include "comine/synthetic.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace comine {
namespace {

using testing::WalkthroughGroup;

constexpr BalanceMode kModes[] = {BalanceMode::kNone, BalanceMode::kDynamic,
                                  BalanceMode::kContextSplit};

RuntimeConfig Config(unsigned workers, BalanceMode mode) {
  RuntimeConfig c;
  c.workers = workers;
  c.balance = mode;
  // Small intervals so that epochs and handoffs actually happen.
  c.epoch.inter_interval = 64;
  c.epoch.intra_interval = 8;
  return c;
}

TEST(RunParallel, OneWorkerEqualsCoMine) {
  TemporalGraph g = BuildIndexedGraph(GenerateSynthetic(SyntheticMode::kUniform, 20, 500, 1, 300));
  MGTree tree = ConstructMGTree(WalkthroughGroup());
  MatchResult want = CoMine(g, tree, 40, MineMode::kEnumerate);
  for (BalanceMode mode : kModes) {
    ParallelResult r = RunParallel(g, tree, 40, MineMode::kEnumerate, Config(1, mode));
    EXPECT_EQ(r.result.counts, want.counts);
    EXPECT_EQ(r.result.matches, want.matches);
    EXPECT_EQ(r.stats.visits(), want.stats.visits);
    ASSERT_EQ(r.stats.workers.size(), 1u);
  }
}

TEST(RunParallel, ResultsIgnoreWorkersAndBalance) {
  Rng rng(404);
  for (int i = 0; i < 24; ++i) {
    auto group = RandomGroup(rng, static_cast<GroupShape>(i % 3), 2 + i % 5, 4);
    TemporalGraph g = BuildIndexedGraph(RandomEdges(rng, 12, 300, 100));
    Timestamp delta = std::uniform_int_distribution<Timestamp>(1, 60)(rng);
    MGTree tree = ConstructMGTree(group);
    MatchResult want = CoMine(g, tree, delta, MineMode::kEnumerate);
    for (unsigned w : {2u, 4u, 8u}) {
      for (BalanceMode mode : kModes) {
        ParallelResult r = RunParallel(g, tree, delta, MineMode::kEnumerate, Config(w, mode));
        ASSERT_EQ(r.result.counts, want.counts) << i << " w=" << w << " " << ToString(mode);
        EXPECT_EQ(r.result.matches, want.matches);
        EXPECT_EQ(r.stats.workers.size(), w);
        if (mode != BalanceMode::kContextSplit) {
          EXPECT_EQ(r.stats.visits(), want.stats.visits);
        }
      }
    }
  }
}

TEST(RunParallel, ContextSplitRebalancesSkewedInput) {
  TemporalGraph g = BuildIndexedGraph(GenerateSynthetic(SyntheticMode::kHub, 40, 3000, 8, 100000));
  MGTree tree = ConstructMGTree(WalkthroughGroup());
  MatchResult want = CoMine(g, tree, 2000, MineMode::kCount);
  RuntimeConfig c = Config(4, BalanceMode::kContextSplit);
  c.epoch.idle_fraction = 0.0;
  ParallelResult r = RunParallel(g, tree, 2000, MineMode::kCount, c);
  EXPECT_EQ(r.result.counts, want.counts);
  EXPECT_GT(r.stats.epochs + r.stats.handoffs, 0u);
  // Splitting only moves work around; each candidate is still examined once.
  EXPECT_EQ(r.stats.visits(), want.stats.visits);
}

TEST(RunParallel, DynamicBalancesHubSkewBetterThanStatic) {
  TemporalGraph g = BuildIndexedGraph(GenerateSynthetic(SyntheticMode::kHub, 200, 20000, 3, 1000000));
  MGTree tree = ConstructMGTree(WalkthroughGroup());
  Timestamp delta = 20000;
  ParallelResult none = RunParallel(g, tree, delta, MineMode::kCount, Config(4, BalanceMode::kNone));
  ParallelResult dyn = RunParallel(g, tree, delta, MineMode::kCount, Config(4, BalanceMode::kDynamic));
  EXPECT_EQ(none.result.counts, dyn.result.counts);
  EXPECT_EQ(none.stats.visits(), dyn.stats.visits());
  EXPECT_GT(none.stats.VisitImbalance(), 1.2);
  EXPECT_LT(dyn.stats.VisitImbalance(), none.stats.VisitImbalance())
      << "busy " << dyn.stats.BusyImbalance() << " vs " << none.stats.BusyImbalance();
}

TEST(RunPlanParallel, SameAsTreeEntryPoint) {
  TemporalGraph g = BuildIndexedGraph(GenerateSynthetic(SyntheticMode::kBurst, 30, 800, 2, 5000));
  MGTree tree = ConstructMGTree(WalkthroughGroup());
  TraversalPlan plan = SpecializePlan(tree);
  for (BalanceMode mode : kModes) {
    auto a = RunPlanParallel(g, plan, 100, MineMode::kCount, Config(3, mode));
    auto b = RunParallel(g, tree, 100, MineMode::kCount, Config(3, mode));
    EXPECT_EQ(a.result.counts, b.result.counts);
  }
}

TEST(RunStats, JsonAndSigma) {
  TemporalGraph g = BuildIndexedGraph(GenerateSynthetic(SyntheticMode::kUniform, 10, 200, 5, 100));
  MGTree tree = ConstructMGTree(WalkthroughGroup());
  ParallelResult r = RunParallel(g, tree, 50, MineMode::kCount, Config(2, BalanceMode::kDynamic));
  EXPECT_DOUBLE_EQ(r.stats.sigma,
                   static_cast<double>(r.result.total_count()) / g.num_edges());
  std::uint64_t matches = 0;
  for (const auto& w : r.stats.workers) matches += w.matches;
  EXPECT_EQ(matches, r.result.total_count());
  auto j = ToJson(r.stats);
  EXPECT_EQ(j["visits"], r.stats.visits());
  EXPECT_EQ(j["workers"].size(), 2u);
  EXPECT_TRUE(j.contains("sigma"));
  EXPECT_TRUE(j.contains("epochs"));
  EXPECT_GE(r.stats.VisitImbalance(), 1.0);
}

}  // namespace
}  // namespace comine
