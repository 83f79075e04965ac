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
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "comine/graph.h"
#include "comine/match_context.h"
#include "comine/mgtree.h"
#include "comine/motif.h"
#include "comine/query.h"

namespace comine {

using Match = std::vector<EdgeId>;

// Candidate-level instrumentation. A visit is one candidate examined; an
// expansion is one candidate accepted.
struct MinerStats {
  std::uint64_t visits = 0;
  std::uint64_t expansions = 0;
  // node_visits[node][rank], rank 0-based over the full motif.
  std::vector<std::vector<std::uint64_t>> node_visits;

  void Resize(const MGTree& tree);
  void Merge(const MinerStats& other);
  // Visits summed over all ranks of one node.
  std::uint64_t NodeTotal(NodeIndex n) const;
};

struct MatchResult {
  std::vector<std::string> names;
  std::vector<std::uint64_t> counts;
  // Filled in enumerate mode when no sink is given; one list per motif.
  std::vector<std::vector<Match>> matches;
  MinerStats stats;

  void Init(const std::vector<Motif>& motifs, MineMode mode);
  void Merge(MatchResult&& other);
  // Sorts every match list lexicographically.
  void SortMatches();
  std::uint64_t total_count() const;
};

// Receives matches as they are found, instead of storing them.
class MatchSink {
 public:
  virtual ~MatchSink() = default;
  virtual void OnMatch(std::size_t motif, std::span<const EdgeId> edges) = 0;
};

// Writes "name: e1,e2,...".
void WriteMatchLine(std::ostream& out, const std::string& name,
                    std::span<const EdgeId> edges);

// Baseline single-motif search.
MatchResult MineSingle(const TemporalGraph& g, const Motif& m, Timestamp delta,
                       MineMode mode, MatchSink* sink = nullptr);

// Joint search over an MG-Tree; counts are per tree.motifs entry.
MatchResult CoMine(const TemporalGraph& g, const MGTree& tree, Timestamp delta,
                   MineMode mode, MatchSink* sink = nullptr);

// MineSingle over every motif, results in group order with summed stats.
MatchResult MineIndividually(const TemporalGraph& g,
                             const std::vector<Motif>& motifs, Timestamp delta,
                             MineMode mode);

}  // namespace comine
