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

#include "comine/explorer.h"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <string_view>

#include "comine/match_context.h"

namespace comine {

namespace {

template <typename T>
void ReadEnv(const char* name, T& value) {
  const char* raw = std::getenv(name);
  if (raw == nullptr) return;
  std::string_view text(raw);
  T parsed{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), parsed);
  if (ec == std::errc() && ptr == text.data() + text.size() && parsed > 0) {
    value = parsed;
  }
}

// from_chars for double is missing in some libstdc++ builds.
void ReadEnvDouble(const char* name, double& value) {
  const char* raw = std::getenv(name);
  if (raw == nullptr) return;
  char* end = nullptr;
  double parsed = std::strtod(raw, &end);
  if (end != raw && *end == '\0' && parsed >= 0 && parsed <= 1) value = parsed;
}

}  // namespace

EpochConfig EpochConfig::FromEnvironment() {
  EpochConfig c;
  ReadEnv("COMINE_INTER_INTRVL", c.inter_interval);
  ReadEnv("COMINE_INTRA_INTRVL", c.intra_interval);
  ReadEnvDouble("COMINE_IDLE_FRAC", c.idle_fraction);
  return c;
}

Explorer::Explorer(const TemporalGraph& g, const TraversalPlan& plan,
                   Timestamp delta, MineMode mode)
    : g_(g), plan_(plan), delta_(delta), mode_(mode) {}

MatchResult Explorer::NewResult() const {
  MatchResult r;
  r.Init(plan_.motifs, mode_);
  r.stats.node_visits.assign(plan_.num_nodes, {});
  for (const PlanStep& st : plan_.steps) {
    auto& row = r.stats.node_visits[st.node];
    row.resize(std::max<std::size_t>(row.size(), st.rank + 1), 0);
  }
  return r;
}

CandidateRange Explorer::RangeFor(const SearchContext& ctx,
                                  std::uint32_t step) const {
  const PlanStep& st = plan_.steps[step];
  if (ctx.stack.empty()) {
    CandidateRange r{CandidateSource::kAllEdges, ctx.root_lo, ctx.root_hi};
    r.end = std::min<std::uint32_t>(r.end, g_.num_edges());
    return r;
  }
  EdgeId after = ctx.stack.back();
  Timestamp t_max = WindowEnd(g_.time(ctx.stack.front()), delta_);
  switch (st.source) {
    case StepSource::kOutOfSrc:
      return g_.RangeAfter(CandidateSource::kOutOf, ctx.m2g[st.edge.src], after,
                           t_max);
    case StepSource::kInOfDst:
      return g_.RangeAfter(CandidateSource::kInOf, ctx.m2g[st.edge.dst], after,
                           t_max);
    case StepSource::kScanAll:
      break;
  }
  return g_.RangeAfter(CandidateSource::kAllEdges, 0, after, t_max);
}

SearchContext Explorer::RootContext(EdgeId lo, EdgeId hi) const {
  SearchContext ctx;
  ctx.root_lo = lo;
  ctx.root_hi = hi;
  ctx.m2g.assign(plan_.num_vertices, kNoVertex);
  if (plan_.entry_begin < plan_.entry_end && lo < hi) {
    LevelState level;
    level.step = plan_.branch_table[plan_.entry_begin];
    level.next_sibling = plan_.entry_begin + 1;
    level.sibling_end = plan_.entry_end;
    level.range = RangeFor(ctx, level.step);
    ctx.levels.push_back(level);
  }
  return ctx;
}

void Explorer::Bind(SearchContext& ctx, const PlanStep& st, EdgeId e) const {
  const TemporalEdge& ge = g_.edge(e);
  if (!st.src_bound) ctx.m2g[st.edge.src] = ge.src;
  if (!st.dst_bound) ctx.m2g[st.edge.dst] = ge.dst;
  ctx.stack.push_back(e);
}

void Explorer::Unbind(SearchContext& ctx, const PlanStep& st) const {
  if (!st.src_bound) ctx.m2g[st.edge.src] = kNoVertex;
  if (!st.dst_bound) ctx.m2g[st.edge.dst] = kNoVertex;
  ctx.stack.pop_back();
}

void Explorer::Emit(const SearchContext& ctx, std::size_t q,
                    MatchResult& out) const {
  ++out.counts[q];
  if (mode_ == MineMode::kEnumerate) out.matches[q].push_back(ctx.stack);
}

bool Explorer::Run(SearchContext& ctx, std::uint64_t budget,
                   MatchResult& out) const {
  std::uint64_t used = 0;
  auto taken = [&](VertexId v) {
    return std::find(ctx.m2g.begin(), ctx.m2g.end(), v) != ctx.m2g.end();
  };
  while (!ctx.levels.empty()) {
    LevelState& level = ctx.levels.back();
    if (!level.range.empty()) {
      // Yield points sit only here, before a candidate is examined.
      if (used == budget) return false;
      ++used;
      const PlanStep& st = plan_.steps[level.step];
      const EdgeId e = g_.CandidateAt(level.range.source, level.range.begin++);
      ++out.stats.visits;
      ++out.stats.node_visits[st.node][st.rank];
      const TemporalEdge& ge = g_.edge(e);
      if (ge.src == ge.dst) continue;
      if (!st.src_bound && taken(ge.src)) continue;
      if (st.dst_bound) {
        if (st.source != StepSource::kInOfDst && ge.dst != ctx.m2g[st.edge.dst]) {
          continue;
        }
      } else if (taken(ge.dst)) {
        continue;
      }
      ++out.stats.expansions;
      Bind(ctx, st, e);
      if (st.emit) Emit(ctx, *st.emit, out);
      if (st.next_begin < st.next_end) {
        level.matched = e;
        LevelState child;
        child.step = plan_.branch_table[st.next_begin];
        child.next_sibling = st.next_begin + 1;
        child.sibling_end = st.next_end;
        child.range = RangeFor(ctx, child.step);
        ctx.levels.push_back(child);
      } else {
        Unbind(ctx, st);
      }
      continue;
    }
    if (level.next_sibling < level.sibling_end) {
      level.step = plan_.branch_table[level.next_sibling++];
      level.range = RangeFor(ctx, level.step);
      continue;
    }
    if (ctx.levels.size() - 1 == ctx.floor) {
      ctx.levels.clear();
      ctx.stack.clear();
      std::fill(ctx.m2g.begin(), ctx.m2g.end(), kNoVertex);
      return true;
    }
    ctx.levels.pop_back();
    LevelState& parent = ctx.levels.back();
    Unbind(ctx, plan_.steps[parent.step]);
    parent.matched = kNoEdge;
  }
  return true;
}

SearchContext Explorer::Prefix(const SearchContext& ctx,
                               std::size_t depth) const {
  SearchContext out;
  out.floor = depth;
  out.root_lo = ctx.root_lo;
  out.root_hi = ctx.root_hi;
  out.m2g.assign(plan_.num_vertices, kNoVertex);
  for (std::size_t d = 0; d < depth; ++d) {
    LevelState frozen = ctx.levels[d];
    frozen.range.begin = frozen.range.end;
    frozen.next_sibling = frozen.sibling_end;
    out.levels.push_back(frozen);
    Bind(out, plan_.steps[frozen.step], frozen.matched);
  }
  return out;
}

std::vector<SearchContext> Explorer::Split(SearchContext ctx,
                                           std::size_t parts) const {
  std::vector<SearchContext> out;
  parts = std::max<std::size_t>(parts, 1);
  for (std::size_t d = ctx.floor; d < ctx.levels.size(); ++d) {
    const LevelState& level = ctx.levels[d];
    const std::uint32_t n = level.range.size();
    if (n > 0) {
      const std::uint32_t chunk =
          static_cast<std::uint32_t>((n + parts - 1) / parts);
      for (std::uint32_t b = level.range.begin; b < level.range.end; b += chunk) {
        SearchContext piece = Prefix(ctx, d);
        LevelState l;
        l.step = level.step;
        l.range = {level.range.source, b, std::min(b + chunk, level.range.end)};
        piece.levels.push_back(l);
        out.push_back(std::move(piece));
      }
    }
    for (std::uint32_t s = level.next_sibling; s < level.sibling_end; ++s) {
      SearchContext fresh = Prefix(ctx, d);
      LevelState l;
      l.step = plan_.branch_table[s];
      l.range = RangeFor(fresh, l.step);
      if (l.range.empty()) continue;
      fresh.levels.push_back(l);
      out.push_back(std::move(fresh));
    }
  }
  return out;
}

std::optional<SearchContext> Explorer::SiblingHandoff(SearchContext& ctx) const {
  for (std::size_t d = ctx.levels.size(); d-- > ctx.floor;) {
    LevelState& level = ctx.levels[d];
    if (level.next_sibling >= level.sibling_end) continue;
    SearchContext fresh = Prefix(ctx, d);
    LevelState l;
    l.step = plan_.branch_table[level.next_sibling++];
    l.range = RangeFor(fresh, l.step);
    fresh.levels.push_back(l);
    return fresh;
  }
  return std::nullopt;
}

std::uint64_t Explorer::PendingRootCandidates(const SearchContext& ctx) const {
  if (ctx.levels.empty() || ctx.floor > 0) return 0;
  return ctx.levels.front().range.size();
}

std::optional<std::vector<std::vector<SearchContext>>> RebalanceEpoch(
    const Explorer& explorer, std::vector<SearchContext> active,
    std::size_t workers, std::size_t idle, const EpochConfig& config) {
  if (workers == 0 || idle == 0 ||
      static_cast<double>(idle) <
          config.idle_fraction * static_cast<double>(workers)) {
    return std::nullopt;
  }
  std::vector<std::vector<SearchContext>> assignment(workers);
  std::size_t next = 0;
  for (SearchContext& ctx : active) {
    for (SearchContext& piece : explorer.Split(std::move(ctx), workers)) {
      assignment[next].push_back(std::move(piece));
      next = (next + 1) % workers;
    }
  }
  return assignment;
}

}  // namespace comine
