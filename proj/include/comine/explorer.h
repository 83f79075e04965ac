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

#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "comine/graph.h"
#include "comine/miner.h"
#include "comine/plan.h"
#include "comine/query.h"

namespace comine {

// Loop state of one plan level inside a SearchContext.
struct LevelState {
  std::uint32_t step = 0;
  // Unexplored sibling branches, as a range of TraversalPlan::branch_table.
  std::uint32_t next_sibling = 0;
  std::uint32_t sibling_end = 0;
  // Candidates not yet examined.
  CandidateRange range;
  // Candidate this level has descended into, or kNoEdge.
  EdgeId matched = kNoEdge;

  friend bool operator==(const LevelState&, const LevelState&) = default;
};

// A suspended depth-first search over a plan. Levels below `floor` are a
// frozen prefix: their matched edges are part of the partial match but their
// remaining candidates and siblings belong to some other context, so they are
// never resumed here.
struct SearchContext {
  std::vector<LevelState> levels;
  std::size_t floor = 0;
  std::vector<EdgeId> stack;
  std::vector<VertexId> m2g;
  // Rank-0 candidates are restricted to edge ids in [root_lo, root_hi).
  EdgeId root_lo = 0;
  EdgeId root_hi = 0;

  bool done() const { return levels.empty(); }

  friend bool operator==(const SearchContext&, const SearchContext&) = default;
};

// Epoch gating for context splitting. The defaults are tunable and may be
// overridden through COMINE_INTER_INTRVL, COMINE_INTRA_INTRVL and
// COMINE_IDLE_FRAC.
struct EpochConfig {
  // Candidates processed between epoch boundaries.
  std::uint64_t inter_interval = 4096;
  // Candidates processed between idle polls.
  std::uint64_t intra_interval = 64;
  // Minimum idle fraction that triggers a rebalance.
  double idle_fraction = 0.25;

  static EpochConfig FromEnvironment();
};

class Explorer {
 public:
  static constexpr std::uint64_t kNoBudget =
      std::numeric_limits<std::uint64_t>::max();

  Explorer(const TemporalGraph& g, const TraversalPlan& plan, Timestamp delta,
           MineMode mode);

  // Fresh search over rank-0 candidates with ids in [lo, hi).
  SearchContext RootContext(EdgeId lo, EdgeId hi) const;

  // An empty accumulator sized for this plan.
  MatchResult NewResult() const;

  // Examines at most `budget` candidates, accumulating into `out`. Returns
  // true once the context is finished.
  bool Run(SearchContext& ctx, std::uint64_t budget, MatchResult& out) const;

  // Decomposes the unexplored part of `ctx` into independent contexts: every
  // live level's remaining candidates in up to `parts` disjoint pieces, plus
  // one fresh context per unexplored sibling. The input is consumed.
  std::vector<SearchContext> Split(SearchContext ctx, std::size_t parts) const;

  // Hands the deepest unexplored sibling to a new context and advances the
  // sibling cursor of `ctx`. nullopt when there is none.
  std::optional<SearchContext> SiblingHandoff(SearchContext& ctx) const;

  // Rank-0 candidates left in `ctx`, or 0.
  std::uint64_t PendingRootCandidates(const SearchContext& ctx) const;

  const TraversalPlan& plan() const { return plan_; }

 private:
  CandidateRange RangeFor(const SearchContext& ctx, std::uint32_t step) const;
  // ctx's first `depth` levels as a frozen prefix.
  SearchContext Prefix(const SearchContext& ctx, std::size_t depth) const;
  void Bind(SearchContext& ctx, const PlanStep& st, EdgeId e) const;
  void Unbind(SearchContext& ctx, const PlanStep& st) const;
  void Emit(const SearchContext& ctx, std::size_t q, MatchResult& out) const;

  const TemporalGraph& g_;
  const TraversalPlan& plan_;
  Timestamp delta_;
  MineMode mode_;
};

// One rebalancing epoch over the contexts held by busy workers. A no-op
// (nullopt) unless idle / workers reaches the configured fraction; otherwise
// every context is split `workers` ways and the pieces are dealt round-robin.
std::optional<std::vector<std::vector<SearchContext>>> RebalanceEpoch(
    const Explorer& explorer, std::vector<SearchContext> active,
    std::size_t workers, std::size_t idle, const EpochConfig& config);

}  // namespace comine
