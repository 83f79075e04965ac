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

#include "comine/match_context.h"

#include <algorithm>
#include <cassert>
#include <cstdio>
#include <cstdlib>

namespace comine {

namespace {

[[noreturn]] void Die(const char* what) {
  std::fprintf(stderr, "match context invariant violated: %s\n", what);
  std::abort();
}

void MapVertex(MatchContext& ctx, MotifVertex m, VertexId g) {
  if (ctx.m2g[m] == kNoVertex) {
    if (ctx.GraphToMotif(g)) Die("graph vertex already mapped");
    ctx.m2g[m] = g;
  } else if (ctx.m2g[m] != g) {
    Die("motif vertex mapped elsewhere");
  }
  ++ctx.incnt[m];
}

void UnmapVertex(MatchContext& ctx, MotifVertex m) {
  if (ctx.incnt[m] == 0) Die("incident count underflow");
  if (--ctx.incnt[m] == 0) ctx.m2g[m] = kNoVertex;
}

}  // namespace

void MatchContext::Reset(std::uint32_t motif_vertices) {
  m2g.assign(motif_vertices, kNoVertex);
  incnt.assign(motif_vertices, 0);
  e_stack.clear();
}

std::optional<MotifVertex> MatchContext::GraphToMotif(VertexId g) const {
  for (MotifVertex m = 0; m < m2g.size(); ++m) {
    if (m2g[m] == g) return m;
  }
  return std::nullopt;
}

bool MatchContext::empty() const {
  return e_stack.empty() &&
         std::all_of(m2g.begin(), m2g.end(),
                     [](VertexId v) { return v == kNoVertex; }) &&
         std::all_of(incnt.begin(), incnt.end(),
                     [](std::uint32_t c) { return c == 0; });
}

void RollOnEdge(MatchContext& ctx, MotifVertex u_m, MotifVertex v_m,
                VertexId u_g, VertexId v_g) {
  MapVertex(ctx, u_m, u_g);
  MapVertex(ctx, v_m, v_g);
}

void RollBackEdge(MatchContext& ctx, VertexId u_g, VertexId v_g) {
  auto u_m = ctx.GraphToMotif(u_g);
  auto v_m = ctx.GraphToMotif(v_g);
  if (!u_m || !v_m) Die("rolling back an unmapped edge");
  RollBackMotifEdge(ctx, *u_m, *v_m);
}

void RollBackMotifEdge(MatchContext& ctx, MotifVertex u_m, MotifVertex v_m) {
  UnmapVertex(ctx, u_m);
  UnmapVertex(ctx, v_m);
}

std::string_view ToString(Verdict v) {
  switch (v) {
    case Verdict::kAccept:
      return "accept";
    case Verdict::kTemporalOrder:
      return "temporal-order";
    case Verdict::kTimeWindow:
      return "time-window";
    case Verdict::kStructural:
      return "structural";
  }
  return "?";
}

Verdict CheckCandidate(const TemporalGraph& g, const MatchContext& ctx,
                       EdgeId e, MotifEdge me, Timestamp delta) {
  if (!ctx.e_stack.empty()) {
    if (e <= ctx.e_stack.back()) return Verdict::kTemporalOrder;
    if (g.time(e) - g.time(ctx.e_stack.front()) > delta) {
      return Verdict::kTimeWindow;
    }
  }
  const TemporalEdge& ge = g.edge(e);
  if (ge.src == ge.dst) return Verdict::kStructural;
  auto fits = [&](MotifVertex m, VertexId v) {
    VertexId mapped = ctx.m2g[m];
    if (mapped != kNoVertex) return mapped == v;
    return !ctx.GraphToMotif(v).has_value();
  };
  if (!fits(me.src, ge.src) || !fits(me.dst, ge.dst)) {
    return Verdict::kStructural;
  }
  return Verdict::kAccept;
}

CandidateRange CandidatesFor(const TemporalGraph& g, const MatchContext& ctx,
                             MotifEdge me, Timestamp delta) {
  EdgeId after = kNoEdge;
  Timestamp t_max = kMaxTimestamp;
  if (!ctx.e_stack.empty()) {
    after = ctx.e_stack.back();
    t_max = WindowEnd(g.time(ctx.e_stack.front()), delta);
  }
  if (ctx.m2g[me.src] != kNoVertex) {
    return g.RangeAfter(CandidateSource::kOutOf, ctx.m2g[me.src], after, t_max);
  }
  if (ctx.m2g[me.dst] != kNoVertex) {
    return g.RangeAfter(CandidateSource::kInOf, ctx.m2g[me.dst], after, t_max);
  }
  return g.RangeAfter(CandidateSource::kAllEdges, 0, after, t_max);
}

}  // namespace comine
