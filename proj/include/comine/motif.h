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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace comine {

using MotifVertex = std::uint32_t;

struct MotifEdge {
  MotifVertex src = 0;
  MotifVertex dst = 0;

  friend auto operator<=>(const MotifEdge&, const MotifEdge&) = default;
};

// A δ-temporal motif: edges in temporal rank order (edges[0] happens first).
struct Motif {
  std::string name;
  std::uint32_t num_vertices = 0;
  std::vector<MotifEdge> edges;

  // Sets num_vertices to the largest endpoint + 1.
  static Motif FromEdges(std::string name, std::vector<MotifEdge> edges);

  std::size_t size() const { return edges.size(); }
  bool empty() const { return edges.empty(); }

  // The first n edges, unnamed.
  Motif Prefix(std::size_t n) const;
  bool SameEdges(const Motif& other) const { return edges == other.edges; }
  bool HasSelfLoop() const;

  std::string EdgeString() const;
};

// Relabels vertices in order of first appearance (src before dst, by rank).
Motif Canonicalize(const Motif& m);
bool IsCanonical(const Motif& m);

// Temporal rank (1-based) to static edge.
using TMap = std::map<std::uint32_t, MotifEdge>;
TMap GraphToTMap(const Motif& m);

}  // namespace comine
