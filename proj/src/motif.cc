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

#include "comine/motif.h"

#include <algorithm>
#include <limits>

namespace comine {

Motif Motif::FromEdges(std::string name, std::vector<MotifEdge> edges) {
  Motif m;
  m.name = std::move(name);
  for (const MotifEdge& e : edges) {
    m.num_vertices = std::max({m.num_vertices, e.src + 1, e.dst + 1});
  }
  m.edges = std::move(edges);
  return m;
}

Motif Motif::Prefix(std::size_t n) const {
  n = std::min(n, edges.size());
  return FromEdges("", {edges.begin(), edges.begin() + n});
}

bool Motif::HasSelfLoop() const {
  return std::any_of(edges.begin(), edges.end(),
                     [](const MotifEdge& e) { return e.src == e.dst; });
}

std::string Motif::EdgeString() const {
  std::string out;
  for (const MotifEdge& e : edges) {
    if (!out.empty()) out += ' ';
    out += std::to_string(e.src) + "->" + std::to_string(e.dst);
  }
  return out;
}

Motif Canonicalize(const Motif& m) {
  constexpr MotifVertex kUnset = std::numeric_limits<MotifVertex>::max();
  std::vector<MotifVertex> relabel(m.num_vertices, kUnset);
  MotifVertex next = 0;
  auto map = [&](MotifVertex v) {
    if (relabel[v] == kUnset) relabel[v] = next++;
    return relabel[v];
  };
  std::vector<MotifEdge> edges;
  edges.reserve(m.edges.size());
  for (const MotifEdge& e : m.edges) {
    MotifVertex src = map(e.src);
    MotifVertex dst = map(e.dst);
    edges.push_back({src, dst});
  }
  return Motif::FromEdges(m.name, std::move(edges));
}

bool IsCanonical(const Motif& m) {
  return Canonicalize(m).edges == m.edges;
}

TMap GraphToTMap(const Motif& m) {
  TMap tmap;
  for (std::uint32_t i = 0; i < m.edges.size(); ++i) {
    tmap[i + 1] = m.edges[i];
  }
  return tmap;
}

}  // namespace comine
