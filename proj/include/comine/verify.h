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
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "comine/graph.h"
#include "comine/motif.h"

namespace comine {

// Counts per motif, in group order.
using MinerFn = std::function<std::vector<std::uint64_t>(
    const TemporalGraph&, const std::vector<Motif>&, Timestamp)>;

// Co-mining over the group's MG-Tree.
MinerFn DefaultMiner();

struct Mismatch {
  std::string motif;
  Motif motif_edges;
  std::uint64_t expected = 0;  // oracle
  std::uint64_t actual = 0;    // miner
  Timestamp delta = 0;
  std::uint64_t seed = 0;
  // Smallest edge list found that still shows the disagreement.
  std::vector<RawEdge> witness;
};

void PrintMismatch(std::ostream& out, const Mismatch& m);

// Compares `miner` with the oracle on one instance. With `shrink`, the
// reported witness is reduced by greedily deleting edges while the mismatch
// persists. Throws OracleGuardError on oversized input unless allow_large.
std::optional<Mismatch> VerifyInstance(const std::vector<RawEdge>& edges,
                                       const std::vector<Motif>& motifs,
                                       Timestamp delta, const MinerFn& miner,
                                       bool shrink = true,
                                       bool allow_large = false);

struct FuzzOptions {
  std::size_t instances = 100;
  std::uint64_t seed = 1;
  std::uint32_t max_vertices = 12;
  std::size_t max_edges = 60;
  std::size_t max_motif_edges = 4;
  bool shrink = true;
};

struct FuzzReport {
  std::size_t instances = 0;
  std::optional<Mismatch> first;
};

// Random graphs and motif groups from seeds derived from options.seed.
FuzzReport Fuzz(const FuzzOptions& options, const MinerFn& miner);

}  // namespace comine
