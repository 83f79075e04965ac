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

#include "comine/plan.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "comine/match_context.h"

namespace comine {

namespace {

class PlanBuilder {
 public:
  explicit PlanBuilder(const MGTree& tree) : tree_(tree) {}

  TraversalPlan Build() {
    TraversalPlan plan;
    plan.motifs = tree_.motifs;
    plan.num_nodes = tree_.nodes.size();
    plan.num_vertices = tree_.MaxVertices();
    plan.depth = tree_.MaxDepth();

    std::vector<std::uint32_t> entry;
    const MGNode& root = tree_.nodes[tree_.root];
    if (root.common.empty()) {
      for (NodeIndex c : root.children) entry.push_back(BuildNode(c, 0));
    } else {
      entry.push_back(BuildNode(tree_.root, 0));
    }

    plan.steps = std::move(steps_);
    for (std::size_t s = 0; s < plan.steps.size(); ++s) {
      plan.steps[s].next_begin = static_cast<std::uint32_t>(plan.branch_table.size());
      plan.branch_table.insert(plan.branch_table.end(), next_[s].begin(),
                               next_[s].end());
      plan.steps[s].next_end = static_cast<std::uint32_t>(plan.branch_table.size());
    }
    plan.entry_begin = static_cast<std::uint32_t>(plan.branch_table.size());
    plan.branch_table.insert(plan.branch_table.end(), entry.begin(), entry.end());
    plan.entry_end = static_cast<std::uint32_t>(plan.branch_table.size());
    return plan;
  }

 private:
  // Emits the steps of node n from `first_rank` on; returns the first one.
  std::uint32_t BuildNode(NodeIndex n, std::uint32_t first_rank) {
    const MGNode& node = tree_.nodes[n];
    const auto len = static_cast<std::uint32_t>(node.common.size());
    if (len <= first_rank) {
      throw std::invalid_argument("tree node " + tree_.NodeLabel(n) +
                                  " does not extend its parent");
    }
    std::uint32_t first = static_cast<std::uint32_t>(steps_.size());
    for (std::uint32_t r = first_rank; r < len; ++r) {
      PlanStep step;
      step.node = n;
      step.rank = r;
      step.edge = node.common.edges[r];
      for (std::uint32_t i = 0; i < r; ++i) {
        const MotifEdge& prev = node.common.edges[i];
        step.src_bound |= prev.src == step.edge.src || prev.dst == step.edge.src;
        step.dst_bound |= prev.src == step.edge.dst || prev.dst == step.edge.dst;
      }
      step.source = step.src_bound   ? StepSource::kOutOfSrc
                    : step.dst_bound ? StepSource::kInOfDst
                                     : StepSource::kScanAll;
      steps_.push_back(step);
      next_.emplace_back();
      if (r + 1 < len) next_.back().push_back(first + (r - first_rank) + 1);
    }
    std::uint32_t last = static_cast<std::uint32_t>(steps_.size()) - 1;
    steps_[last].emit = node.query;
    for (NodeIndex c : node.children) {
      std::uint32_t child = BuildNode(c, len);
      next_[last].push_back(child);
    }
    return first;
  }

  const MGTree& tree_;
  std::vector<PlanStep> steps_;
  std::vector<std::vector<std::uint32_t>> next_;
};

class PlanRunner {
 public:
  PlanRunner(const TraversalPlan& plan, const TemporalGraph& g, Timestamp delta,
             MineMode mode, MatchSink* sink, MatchResult& result)
      : plan_(plan),
        g_(g),
        delta_(delta),
        enumerate_(mode == MineMode::kEnumerate),
        sink_(sink),
        result_(result),
        m2g_(plan.num_vertices, kNoVertex) {}

  void Run() {
    for (std::uint32_t b = plan_.entry_begin; b < plan_.entry_end; ++b) {
      RunStep(plan_.branch_table[b]);
    }
  }

 private:
  bool Taken(VertexId v) const {
    return std::find(m2g_.begin(), m2g_.end(), v) != m2g_.end();
  }

  void RunStep(std::uint32_t s) {
    const PlanStep& st = plan_.steps[s];
    EdgeId after = kNoEdge;
    Timestamp t_max = kMaxTimestamp;
    if (!stack_.empty()) {
      after = stack_.back();
      t_max = WindowEnd(g_.time(stack_.front()), delta_);
    }
    CandidateRange range;
    switch (st.source) {
      case StepSource::kScanAll:
        range = g_.RangeAfter(CandidateSource::kAllEdges, 0, after, t_max);
        break;
      case StepSource::kOutOfSrc:
        range = g_.RangeAfter(CandidateSource::kOutOf, m2g_[st.edge.src], after,
                              t_max);
        break;
      case StepSource::kInOfDst:
        range = g_.RangeAfter(CandidateSource::kInOf, m2g_[st.edge.dst], after,
                              t_max);
        break;
    }

    auto& visits = result_.stats.node_visits[st.node][st.rank];
    for (std::uint32_t pos = range.begin; pos < range.end; ++pos) {
      const EdgeId e = g_.CandidateAt(range.source, pos);
      ++result_.stats.visits;
      ++visits;
      const TemporalEdge& ge = g_.edge(e);
      if (ge.src == ge.dst) continue;
      // A bound source is implied by the adjacency list it came from, as is
      // a bound destination reached through the in-index.
      if (!st.src_bound && Taken(ge.src)) continue;
      if (st.dst_bound) {
        if (st.source != StepSource::kInOfDst && ge.dst != m2g_[st.edge.dst]) {
          continue;
        }
      } else if (Taken(ge.dst)) {
        continue;
      }

      ++result_.stats.expansions;
      if (!st.src_bound) m2g_[st.edge.src] = ge.src;
      if (!st.dst_bound) m2g_[st.edge.dst] = ge.dst;
      stack_.push_back(e);
      if (st.emit) Emit(*st.emit);
      for (std::uint32_t b = st.next_begin; b < st.next_end; ++b) {
        RunStep(plan_.branch_table[b]);
      }
      stack_.pop_back();
      if (!st.src_bound) m2g_[st.edge.src] = kNoVertex;
      if (!st.dst_bound) m2g_[st.edge.dst] = kNoVertex;
    }
  }

  void Emit(std::size_t q) {
    ++result_.counts[q];
    if (!enumerate_) return;
    if (sink_ != nullptr) {
      sink_->OnMatch(q, stack_);
    } else {
      result_.matches[q].push_back(stack_);
    }
  }

  const TraversalPlan& plan_;
  const TemporalGraph& g_;
  const Timestamp delta_;
  const bool enumerate_;
  MatchSink* sink_;
  MatchResult& result_;
  std::vector<VertexId> m2g_;
  std::vector<EdgeId> stack_;
};

std::string_view SourceName(StepSource s) {
  switch (s) {
    case StepSource::kScanAll:
      return "scan-all";
    case StepSource::kOutOfSrc:
      return "out-of";
    case StepSource::kInOfDst:
      return "in-of";
  }
  return "?";
}

}  // namespace

TraversalPlan SpecializePlan(const MGTree& tree) {
  return PlanBuilder(tree).Build();
}

MatchResult ExecutePlan(const TraversalPlan& plan, const TemporalGraph& g,
                        Timestamp delta, MineMode mode, MatchSink* sink) {
  MatchResult result;
  result.Init(plan.motifs, mode);
  result.stats.node_visits.assign(plan.num_nodes, {});
  for (const PlanStep& st : plan.steps) {
    auto& row = result.stats.node_visits[st.node];
    row.resize(std::max<std::size_t>(row.size(), st.rank + 1), 0);
  }
  PlanRunner(plan, g, delta, mode, sink, result).Run();
  return result;
}

std::string DescribePlan(const TraversalPlan& plan) {
  std::ostringstream out;
  auto visit = [&](auto&& self, std::uint32_t s) -> void {
    const PlanStep& st = plan.steps[s];
    out << std::string(2 * st.rank, ' ') << "step " << s << ": rank "
        << st.rank + 1 << ' ' << st.edge.src << "->" << st.edge.dst << ' '
        << SourceName(st.source);
    if (st.source == StepSource::kOutOfSrc) out << '(' << st.edge.src << ')';
    if (st.source == StepSource::kInOfDst) out << '(' << st.edge.dst << ')';
    if (st.dst_bound && st.source != StepSource::kInOfDst) {
      out << " dst==" << st.edge.dst;
    }
    if (!st.src_bound) out << " inj(" << st.edge.src << ')';
    if (!st.dst_bound) out << " inj(" << st.edge.dst << ')';
    if (st.emit) out << " emit " << plan.motifs[*st.emit].name;
    if (st.next_end - st.next_begin > 1) {
      out << " branch x" << st.next_end - st.next_begin;
    }
    out << '\n';
    for (std::uint32_t b = st.next_begin; b < st.next_end; ++b) {
      self(self, plan.branch_table[b]);
    }
  };
  for (std::uint32_t b = plan.entry_begin; b < plan.entry_end; ++b) {
    visit(visit, plan.branch_table[b]);
  }
  return out.str();
}

}  // namespace comine
