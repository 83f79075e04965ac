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

#include "comine/oracle.h"

#include <algorithm>
#include <numeric>

#include "comine/synthetic.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace comine {
namespace {

using testing::A;
using testing::B;
using testing::C;
using testing::MakeGraph;
using testing::MakeMotif;

TEST(BruteForce, SingleEdgeMotifCountsNonLoopEdges) {
  TemporalGraph g = MakeGraph({{A, B, 1}, {B, B, 2}, {C, A, 3}, {A, C, 3}});
  EXPECT_EQ(BruteForceCount(g, MakeMotif("e", {{0, 1}}), kMaxTimestamp), 3u);
}

TEST(BruteForce, TriangleTuple) {
  TemporalGraph g = MakeGraph({{A, B, 1}, {B, C, 2}, {C, A, 3}});
  Motif tri = MakeMotif("tri", {{0, 1}, {1, 2}, {2, 0}});
  for (Timestamp delta : {2, 3, 100}) {
    EXPECT_EQ(BruteForceEnumerate(g, tri, delta),
              (std::vector<std::vector<EdgeId>>{{0, 1, 2}}));
  }
  EXPECT_TRUE(BruteForceEnumerate(g, tri, 1).empty());
}

TEST(BruteForce, ZeroWindowNeedsEqualTimestamps) {
  TemporalGraph g = MakeGraph({{A, B, 1}, {B, C, 2}, {C, A, 3}});
  EXPECT_EQ(BruteForceCount(g, MakeMotif("p", {{0, 1}, {1, 2}}), 0), 0u);
  TemporalGraph tie = MakeGraph({{A, B, 4}, {B, C, 4}});
  EXPECT_EQ(BruteForceCount(tie, MakeMotif("p", {{0, 1}, {1, 2}}), 0), 1u);
}

TEST(BruteForce, OutputIsSortedAndIncreasing) {
  Rng rng(4);
  TemporalGraph g = BuildIndexedGraph(RandomEdges(rng, 5, 60, 20));
  auto all = BruteForceEnumerate(g, MakeMotif("p", {{0, 1}, {1, 2}}), 10);
  ASSERT_FALSE(all.empty());
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
  for (const auto& t : all) {
    EXPECT_TRUE(std::is_sorted(t.begin(), t.end()));
    EXPECT_EQ(std::adjacent_find(t.begin(), t.end()), t.end());
    EXPECT_LE(g.time(t.back()) - g.time(t.front()), 10);
  }
}

TEST(BruteForce, InvariantUnderVertexRelabeling) {
  Rng rng(9);
  for (int i = 0; i < 20; ++i) {
    std::vector<RawEdge> edges = RandomEdges(rng, 6, 40, 20);
    std::vector<VertexId> perm(6);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<RawEdge> renamed = edges;
    for (RawEdge& e : renamed) {
      e.src = perm[e.src];
      e.dst = perm[e.dst];
    }
    Motif m = RandomMotif(rng, 3, 4, "m");
    EXPECT_EQ(BruteForceEnumerate(BuildIndexedGraph(edges), m, 8),
              BruteForceEnumerate(BuildIndexedGraph(renamed), m, 8));
  }
}

TEST(OracleGuard, RefusesLargeInputs) {
  Rng rng(1);
  TemporalGraph big = BuildIndexedGraph(RandomEdges(rng, 20, 501, 1000));
  Motif four = MakeMotif("f", {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  Motif three = MakeMotif("t", {{0, 1}, {1, 2}, {2, 0}});
  EXPECT_THROW(BruteForceCount(big, four, 10), OracleGuardError);
  EXPECT_NO_THROW(BruteForceCount(big, three, 10));
  EXPECT_NO_THROW(BruteForceCount(big, four, 10, true));
  TemporalGraph small = BuildIndexedGraph(RandomEdges(rng, 20, 500, 1000));
  EXPECT_NO_THROW(CheckOracleGuard(small, four));
}

}  // namespace
}  // namespace comine
