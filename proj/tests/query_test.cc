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

#include "comine/query.h"

#include <sstream>

#include "gtest/gtest.h"

namespace comine {
namespace {

Query Parse(const std::string& text) {
  std::istringstream in(text);
  return ParseQuery(in);
}

std::size_t ErrorLine(const std::string& text) {
  try {
    Parse(text);
  } catch (const QueryError& e) {
    return e.line();
  }
  ADD_FAILURE() << "no error for:\n" << text;
  return 9999;
}

TEST(ParseQuery, ReadsAllDirectives) {
  Query q = Parse(
      "graph data/g.txt\n"
      "delta 2.5   # seconds\n"
      "mode enumerate\n"
      "threads 3\n"
      "balance context_split\n"
      "motif tri\n"
      "  edge x y\n"
      "  edge y z\n"
      "  edge z x\n"
      "end\n");
  EXPECT_EQ(q.graph_path, "data/g.txt");
  EXPECT_DOUBLE_EQ(q.delta, 2.5);
  EXPECT_EQ(q.mode, MineMode::kEnumerate);
  EXPECT_EQ(q.threads, 3u);
  EXPECT_EQ(q.balance, BalanceMode::kContextSplit);
  ASSERT_EQ(q.motifs.size(), 1u);
  EXPECT_EQ(q.motifs[0].name, "tri");
  EXPECT_EQ(q.motifs[0].EdgeString(), "0->1 1->2 2->0");
}

TEST(ParseQuery, CanonicalizesMotifs) {
  Query q = Parse("delta 1\nmotif m\nedge c a\nedge a b\nend\n");
  EXPECT_EQ(q.motifs[0].EdgeString(), "0->1 1->2");
}

TEST(ParseQuery, DeltaIsScaledAndFloored) {
  Query q = Parse("delta 2.75\nmotif m\nedge a b\nend\n");
  EXPECT_EQ(q.DeltaTicks(0), 2);
  EXPECT_EQ(q.DeltaTicks(1), 27);
  EXPECT_EQ(q.DeltaTicks(3), 2750);
}

TEST(ParseQuery, Defaults) {
  Query q = Parse("delta 10\nmotif m\nedge a b\nend\n");
  EXPECT_EQ(q.mode, MineMode::kCount);
  EXPECT_EQ(q.balance, BalanceMode::kDynamic);
  EXPECT_GE(q.threads, 1u);
  EXPECT_TRUE(q.graph_path.empty());
}

TEST(ParseQuery, ReportsErrorLines) {
  EXPECT_EQ(ErrorLine("delta 1\nmotif m\nedge a a\nend\n"), 3u);
  EXPECT_EQ(ErrorLine("delta 1\nmotif m\nend\n"), 2u);
  EXPECT_EQ(ErrorLine("delta 1\nmotif m\nedge a b\n"), 2u);
  EXPECT_EQ(ErrorLine("delta 1\nfoo bar\n"), 2u);
  EXPECT_EQ(ErrorLine("delta 0\nmotif m\nedge a b\nend\n"), 1u);
  EXPECT_EQ(ErrorLine("delta -3\n"), 1u);
  EXPECT_EQ(ErrorLine("delta x\n"), 1u);
  EXPECT_EQ(ErrorLine("delta 1\nmode fast\n"), 2u);
  EXPECT_EQ(ErrorLine("delta 1\nthreads 0\n"), 2u);
  EXPECT_EQ(ErrorLine("delta 1\nbalance steal\n"), 2u);
  EXPECT_EQ(ErrorLine("delta 1\nmotif m\nedge a b\nmotif n\n"), 4u);
  EXPECT_EQ(ErrorLine("motif m\nedge a b\nend\n"), 0u);   // no delta
  EXPECT_EQ(ErrorLine("delta 1\n"), 0u);                  // no motifs
}

TEST(ParseQuery, RejectsDuplicates) {
  EXPECT_EQ(ErrorLine("delta 1\nmotif m\nedge a b\nend\nmotif m\nedge a b\nedge b c\nend\n"),
            5u);
  // Same shape under different labels.
  EXPECT_EQ(ErrorLine("delta 1\nmotif m\nedge a b\nend\nmotif n\nedge q r\nend\n"),
            5u);
}

TEST(BalanceMode, RoundTripsThroughText) {
  for (BalanceMode m :
       {BalanceMode::kNone, BalanceMode::kDynamic, BalanceMode::kContextSplit}) {
    EXPECT_EQ(ParseBalanceMode(ToString(m)), m);
  }
  EXPECT_EQ(ParseMineMode(ToString(MineMode::kEnumerate)), MineMode::kEnumerate);
  EXPECT_FALSE(ParseMineMode("all").has_value());
}

}  // namespace
}  // namespace comine
