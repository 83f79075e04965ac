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

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "comine/graph.h"
#include "comine/motif.h"

namespace comine {

// Book-keeping for one partial match. Motifs are tiny, so the graph-to-motif
// direction is a scan over m2g rather than a hash map; incnt is kept per motif
// vertex, which is the same thing as per graph vertex while the mapping is a
// bijection.
struct MatchContext {
  std::vector<VertexId> m2g;
  std::vector<std::uint32_t> incnt;
  std::vector<EdgeId> e_stack;

  MatchContext() = default;
  explicit MatchContext(std::uint32_t motif_vertices) { Reset(motif_vertices); }

  void Reset(std::uint32_t motif_vertices);

  VertexId Mapped(MotifVertex v) const { return m2g[v]; }
  std::optional<MotifVertex> GraphToMotif(VertexId g) const;

  // No mapped vertices and an empty stack.
  bool empty() const;

  friend bool operator==(const MatchContext&, const MatchContext&) = default;
};

// Maps (u_m, v_m) onto (u_g, v_g) and bumps both incident counts. The caller
// must have checked consistency; violations abort.
void RollOnEdge(MatchContext& ctx, MotifVertex u_m, MotifVertex v_m,
                VertexId u_g, VertexId v_g);

// Inverse of RollOnEdge for the edge whose graph endpoints are (u_g, v_g).
void RollBackEdge(MatchContext& ctx, VertexId u_g, VertexId v_g);

// Same, addressed by motif endpoints (no reverse lookup).
void RollBackMotifEdge(MatchContext& ctx, MotifVertex u_m, MotifVertex v_m);

enum class Verdict { kAccept, kTemporalOrder, kTimeWindow, kStructural };
std::string_view ToString(Verdict v);

// Whether graph edge `e` may extend ctx as motif edge `me`. The stack top is
// the previous rank's edge; the stack bottom anchors the δ window.
Verdict CheckCandidate(const TemporalGraph& g, const MatchContext& ctx,
                       EdgeId e, MotifEdge me, Timestamp delta);

// Candidate range for the next motif edge: out-edges of a mapped source,
// in-edges of a mapped destination, otherwise every edge. Ranges start after
// the stack top and stop at t(bottom) + δ.
CandidateRange CandidatesFor(const TemporalGraph& g, const MatchContext& ctx,
                             MotifEdge me, Timestamp delta);

// t + δ without overflow.
inline Timestamp WindowEnd(Timestamp t, Timestamp delta) {
  return t > kMaxTimestamp - delta ? kMaxTimestamp : t + delta;
}

}  // namespace comine
