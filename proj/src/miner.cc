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
#include <ostream>
#include <stdexcept>

namespace comine {

void MinerStats::Resize(const MGTree& tree) {
  node_visits.resize(tree.nodes.size());
  for (NodeIndex n = 0; n < tree.nodes.size(); ++n) {
    node_visits[n].resize(tree.nodes[n].common.size(), 0);
  }
}

void MinerStats::Merge(const MinerStats& other) {
  visits += other.visits;
  expansions += other.expansions;
  if (node_visits.size() < other.node_visits.size()) {
    node_visits.resize(other.node_visits.size());
  }
  for (std::size_t n = 0; n < other.node_visits.size(); ++n) {
    auto& mine = node_visits[n];
    const auto& theirs = other.node_visits[n];
    if (mine.size() < theirs.size()) mine.resize(theirs.size(), 0);
    for (std::size_t r = 0; r < theirs.size(); ++r) mine[r] += theirs[r];
  }
}

std::uint64_t MinerStats::NodeTotal(NodeIndex n) const {
  std::uint64_t total = 0;
  if (n < node_visits.size()) {
    for (std::uint64_t v : node_visits[n]) total += v;
  }
  return total;
}

void MatchResult::Init(const std::vector<Motif>& motifs, MineMode mode) {
  names.clear();
  for (const Motif& m : motifs) names.push_back(m.name);
  counts.assign(motifs.size(), 0);
  matches.clear();
  if (mode == MineMode::kEnumerate) matches.resize(motifs.size());
}

void MatchResult::Merge(MatchResult&& other) {
  if (counts.size() < other.counts.size()) {
    counts.resize(other.counts.size(), 0);
    names = other.names;
  }
  for (std::size_t i = 0; i < other.counts.size(); ++i) {
    counts[i] += other.counts[i];
  }
  if (matches.size() < other.matches.size()) matches.resize(other.matches.size());
  for (std::size_t i = 0; i < other.matches.size(); ++i) {
    auto& dst = matches[i];
    auto& src = other.matches[i];
    if (dst.empty()) {
      dst = std::move(src);
    } else {
      dst.insert(dst.end(), std::make_move_iterator(src.begin()),
                 std::make_move_iterator(src.end()));
    }
  }
  stats.Merge(other.stats);
}

void MatchResult::SortMatches() {
  for (auto& list : matches) std::sort(list.begin(), list.end());
}

std::uint64_t MatchResult::total_count() const {
  std::uint64_t total = 0;
  for (std::uint64_t c : counts) total += c;
  return total;
}

void WriteMatchLine(std::ostream& out, const std::string& name,
                    std::span<const EdgeId> edges) {
  out << name << ':';
  char sep = ' ';
  for (EdgeId e : edges) {
    out << sep << e;
    sep = ',';
  }
  out << '\n';
}

namespace {

// Recursive search shared by the single-motif and tree drivers. A node's
// query is emitted when its common motif is complete, before its children
// are explored.
class Searcher {
 public:
  Searcher(const TemporalGraph& g, const MGTree& tree, Timestamp delta,
           MineMode mode, MatchSink* sink, MatchResult& result)
      : g_(g),
        tree_(tree),
        delta_(delta),
        enumerate_(mode == MineMode::kEnumerate),
        sink_(sink),
        result_(result),
        ctx_(tree.MaxVertices()) {}

  void Match(NodeIndex n, std::uint32_t rank) {
    const MGNode& node = tree_.nodes[n];
    if (rank == node.common.size()) {
      if (node.query) Emit(*node.query);
      for (NodeIndex c : node.children) Match(c, rank);
      return;
    }
    const MotifEdge me = node.common.edges[rank];
    const CandidateRange range = CandidatesFor(g_, ctx_, me, delta_);
    auto& visits = result_.stats.node_visits[n][rank];
    for (std::uint32_t pos = range.begin; pos < range.end; ++pos) {
      const EdgeId e = g_.CandidateAt(range.source, pos);
      ++result_.stats.visits;
      ++visits;
      Verdict v = CheckCandidate(g_, ctx_, e, me, delta_);
      if (v == Verdict::kTimeWindow) break;
      if (v != Verdict::kAccept) continue;
      ++result_.stats.expansions;
      const TemporalEdge& ge = g_.edge(e);
      RollOnEdge(ctx_, me.src, me.dst, ge.src, ge.dst);
      ctx_.e_stack.push_back(e);
      Match(n, rank + 1);
      ctx_.e_stack.pop_back();
      RollBackMotifEdge(ctx_, me.src, me.dst);
    }
  }

  const MatchContext& context() const { return ctx_; }

 private:
  void Emit(std::size_t q) {
    ++result_.counts[q];
    if (!enumerate_) return;
    if (sink_ != nullptr) {
      sink_->OnMatch(q, ctx_.e_stack);
    } else {
      result_.matches[q].push_back(ctx_.e_stack);
    }
  }

  const TemporalGraph& g_;
  const MGTree& tree_;
  const Timestamp delta_;
  const bool enumerate_;
  MatchSink* sink_;
  MatchResult& result_;
  MatchContext ctx_;
};

}  // namespace

MatchResult MineSingle(const TemporalGraph& g, const Motif& m, Timestamp delta,
                       MineMode mode, MatchSink* sink) {
  return CoMine(g, ConstructMGTree({m}), delta, mode, sink);
}

MatchResult CoMine(const TemporalGraph& g, const MGTree& tree, Timestamp delta,
                   MineMode mode, MatchSink* sink) {
  MatchResult result;
  result.Init(tree.motifs, mode);
  result.stats.Resize(tree);
  Searcher searcher(g, tree, delta, mode, sink, result);
  searcher.Match(tree.root, 0);
  if (!searcher.context().empty()) {
    throw std::logic_error("match context not unwound after search");
  }
  return result;
}

MatchResult MineIndividually(const TemporalGraph& g,
                             const std::vector<Motif>& motifs, Timestamp delta,
                             MineMode mode) {
  MatchResult out;
  out.Init(motifs, mode);
  for (std::size_t i = 0; i < motifs.size(); ++i) {
    MatchResult one = MineSingle(g, motifs[i], delta, mode);
    out.counts[i] = one.counts[0];
    if (mode == MineMode::kEnumerate) out.matches[i] = std::move(one.matches[0]);
    out.stats.visits += one.stats.visits;
    out.stats.expansions += one.stats.expansions;
  }
  return out;
}

}  // namespace comine
