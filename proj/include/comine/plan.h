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
#include <optional>
#include <string>
#include <vector>

#include "comine/graph.h"
#include "comine/mgtree.h"
#include "comine/miner.h"
#include "comine/query.h"

namespace comine {

// Where a step takes its candidates from.
enum class StepSource : std::uint8_t {
  kScanAll,   // nothing mapped yet
  kOutOfSrc,  // out-edges of the mapped source
  kInOfDst,   // in-edges of the mapped destination
};

// One unrolled loop level. Which endpoints are already bound is fixed by the
// tree path, so each step knows in advance whether a vertex needs an equality
// test or an injectivity test.
struct PlanStep {
  NodeIndex node = 0;
  std::uint32_t rank = 0;  // 0-based
  MotifEdge edge;
  StepSource source = StepSource::kScanAll;
  bool src_bound = false;
  bool dst_bound = false;
  // Query counted when this step completes its node.
  std::optional<std::size_t> emit;
  // Steps run after an accepted candidate: [next_begin, next_end) in
  // TraversalPlan::branch_table. Empty for leaves.
  std::uint32_t next_begin = 0;
  std::uint32_t next_end = 0;
};

struct TraversalPlan {
  std::vector<PlanStep> steps;
  std::vector<std::uint32_t> branch_table;
  // First steps, as a range of branch_table.
  std::uint32_t entry_begin = 0;
  std::uint32_t entry_end = 0;
  std::vector<Motif> motifs;
  std::size_t num_nodes = 0;
  std::uint32_t num_vertices = 0;
  std::size_t depth = 0;
};

TraversalPlan SpecializePlan(const MGTree& tree);

MatchResult ExecutePlan(const TraversalPlan& plan, const TemporalGraph& g,
                        Timestamp delta, MineMode mode,
                        MatchSink* sink = nullptr);

// One line per step, indented by rank.
std::string DescribePlan(const TraversalPlan& plan);

}  // namespace comine
