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

#include <ostream>

#include "comine/mgtree.h"
#include "comine/miner.h"
#include "comine/oracle.h"
#include "comine/synthetic.h"

namespace comine {

namespace {

std::optional<Mismatch> FirstDifference(const TemporalGraph& g,
                                        const std::vector<Motif>& motifs,
                                        Timestamp delta, const MinerFn& miner,
                                        bool allow_large) {
  std::vector<std::uint64_t> got = miner(g, motifs, delta);
  for (std::size_t i = 0; i < motifs.size(); ++i) {
    std::uint64_t want = BruteForceCount(g, motifs[i], delta, allow_large);
    std::uint64_t have = i < got.size() ? got[i] : 0;
    if (want != have) {
      Mismatch m;
      m.motif = motifs[i].name;
      m.motif_edges = motifs[i];
      m.expected = want;
      m.actual = have;
      m.delta = delta;
      return m;
    }
  }
  return std::nullopt;
}

bool StillFails(const std::vector<RawEdge>& edges, const Motif& motif,
                Timestamp delta, const MinerFn& miner, bool allow_large) {
  TemporalGraph g = BuildIndexedGraph(edges);
  std::vector<std::uint64_t> got = miner(g, {motif}, delta);
  std::uint64_t want = BruteForceCount(g, motif, delta, allow_large);
  return got.empty() || got[0] != want;
}

}  // namespace

MinerFn DefaultMiner() {
  return [](const TemporalGraph& g, const std::vector<Motif>& motifs,
            Timestamp delta) {
    MGTree tree = ConstructMGTree(motifs);
    return CoMine(g, tree, delta, MineMode::kCount).counts;
  };
}

void PrintMismatch(std::ostream& out, const Mismatch& m) {
  out << "mismatch on motif '" << m.motif << "' [" << m.motif_edges.EdgeString()
      << "]: oracle " << m.expected << ", miner " << m.actual
      << ", delta " << m.delta;
  if (m.seed != 0) out << ", seed " << m.seed;
  out << '\n';
  out << "witness (" << m.witness.size() << " edges):\n";
  for (const RawEdge& e : m.witness) {
    out << "  " << e.src << ' ' << e.dst << ' ' << e.t << '\n';
  }
}

std::optional<Mismatch> VerifyInstance(const std::vector<RawEdge>& edges,
                                       const std::vector<Motif>& motifs,
                                       Timestamp delta, const MinerFn& miner,
                                       bool shrink, bool allow_large) {
  TemporalGraph g = BuildIndexedGraph(edges);
  auto mismatch = FirstDifference(g, motifs, delta, miner, allow_large);
  if (!mismatch) return std::nullopt;
  std::vector<RawEdge> witness = edges;
  // Shrinking runs the motif alone; if the bug only shows up in a group,
  // keep the full edge list.
  if (shrink && StillFails(witness, mismatch->motif_edges, delta, miner,
                           allow_large)) {
    bool progress = true;
    while (progress) {
      progress = false;
      for (std::size_t i = 0; i < witness.size();) {
        std::vector<RawEdge> fewer = witness;
        fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(i));
        if (StillFails(fewer, mismatch->motif_edges, delta, miner, allow_large)) {
          witness = std::move(fewer);
          progress = true;
        } else {
          ++i;
        }
      }
    }
    TemporalGraph small = BuildIndexedGraph(witness);
    mismatch->expected =
        BruteForceCount(small, mismatch->motif_edges, delta, allow_large);
    mismatch->actual = miner(small, {mismatch->motif_edges}, delta)[0];
  }
  mismatch->witness = std::move(witness);
  return mismatch;
}

FuzzReport Fuzz(const FuzzOptions& options, const MinerFn& miner) {
  FuzzReport report;
  Rng master(options.seed);
  for (std::size_t i = 0; i < options.instances; ++i) {
    const std::uint64_t seed = master();
    Rng rng(seed);
    auto nv = static_cast<std::uint32_t>(
        std::uniform_int_distribution<std::uint32_t>(2, options.max_vertices)(rng));
    auto ne = std::uniform_int_distribution<std::size_t>(0, options.max_edges)(rng);
    const Timestamp t_max = 100;
    std::vector<RawEdge> edges = RandomEdges(rng, nv, ne, t_max);
    auto shape = static_cast<GroupShape>(
        std::uniform_int_distribution<int>(0, 2)(rng));
    auto size = std::uniform_int_distribution<std::size_t>(2, 4)(rng);
    std::vector<Motif> motifs =
        RandomGroup(rng, shape, size, options.max_motif_edges);
    Timestamp delta = std::uniform_int_distribution<Timestamp>(1, t_max)(rng);
    ++report.instances;
    auto mismatch =
        VerifyInstance(edges, motifs, delta, miner, options.shrink, true);
    if (mismatch) {
      mismatch->seed = seed;
      report.first = std::move(mismatch);
      break;
    }
  }
  return report;
}

}  // namespace comine
