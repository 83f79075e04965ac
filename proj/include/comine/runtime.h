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
#include <vector>

#include "json.hpp"

#include "comine/explorer.h"
#include "comine/graph.h"
#include "comine/mgtree.h"
#include "comine/miner.h"
#include "comine/query.h"

namespace comine {

struct RuntimeConfig {
  unsigned workers = 1;
  BalanceMode balance = BalanceMode::kDynamic;
  // Root edges per work item for the dynamic modes; 0 picks a size from the
  // edge count and worker count.
  std::uint32_t chunk_size = 0;
  EpochConfig epoch;
};

struct WorkerStats {
  std::uint64_t visits = 0;
  std::uint64_t expansions = 0;
  std::uint64_t matches = 0;
  // Thread CPU time spent on search.
  double busy_ms = 0;
  // Root chunks plus pooled contexts this worker ran.
  std::uint64_t contexts = 0;
};

struct RunStats {
  std::vector<WorkerStats> workers;
  double wall_ms = 0;
  std::uint64_t epochs = 0;
  std::uint64_t handoffs = 0;
  std::uint64_t split_contexts = 0;
  // Matches per graph edge.
  double sigma = 0;

  std::uint64_t visits() const;
  std::uint64_t expansions() const;
  // max / mean over workers; 1 for a single worker or no work.
  double VisitImbalance() const;
  double BusyImbalance() const;
};

nlohmann::ordered_json ToJson(const RunStats& stats);

struct ParallelResult {
  MatchResult result;
  RunStats stats;
};

// Mines every motif of `tree` over `g` on `config.workers` threads. Counts and
// sorted match lists do not depend on the worker count or balance mode.
ParallelResult RunParallel(const TemporalGraph& g, const MGTree& tree,
                           Timestamp delta, MineMode mode,
                           const RuntimeConfig& config);

// Same, from an already specialized plan.
ParallelResult RunPlanParallel(const TemporalGraph& g, const TraversalPlan& plan,
                               Timestamp delta, MineMode mode,
                               const RuntimeConfig& config);

}  // namespace comine
