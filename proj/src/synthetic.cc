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

#include "comine/synthetic.h"

#include <algorithm>
#include <stdexcept>

namespace comine {

namespace {

std::uint64_t Uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

bool Chance(Rng& rng, double p) {
  return std::uniform_real_distribution<double>(0, 1)(rng) < p;
}

MotifEdge RandomExtension(Rng& rng, std::uint32_t have,
                          std::uint32_t max_vertices) {
  // One endpoint is an existing vertex; the other is existing or new.
  while (true) {
    std::uint32_t limit = std::min(have + 1, max_vertices);
    auto a = static_cast<MotifVertex>(Uniform(rng, 0, have - 1));
    auto b = static_cast<MotifVertex>(Uniform(rng, 0, limit - 1));
    if (a == b) continue;
    return Chance(rng, 0.5) ? MotifEdge{a, b} : MotifEdge{b, a};
  }
}

bool Contains(const std::vector<Motif>& group, const Motif& m) {
  return std::any_of(group.begin(), group.end(),
                     [&](const Motif& g) { return g.SameEdges(m); });
}

void Rename(std::vector<Motif>& group) {
  for (std::size_t i = 0; i < group.size(); ++i) {
    group[i].name = "m" + std::to_string(i);
  }
}

}  // namespace

std::vector<RawEdge> RandomEdges(Rng& rng, std::uint32_t num_vertices,
                                 std::size_t num_edges, Timestamp t_max,
                                 double self_loop_prob) {
  std::vector<RawEdge> edges;
  edges.reserve(num_edges);
  if (num_vertices == 0) return edges;
  for (std::size_t i = 0; i < num_edges; ++i) {
    RawEdge e;
    e.src = static_cast<VertexId>(Uniform(rng, 0, num_vertices - 1));
    if (num_vertices == 1 || Chance(rng, self_loop_prob)) {
      e.dst = e.src;
    } else {
      do {
        e.dst = static_cast<VertexId>(Uniform(rng, 0, num_vertices - 1));
      } while (e.dst == e.src);
    }
    e.t = static_cast<Timestamp>(Uniform(rng, 0, static_cast<std::uint64_t>(t_max)));
    edges.push_back(e);
  }
  return edges;
}

Motif ExtendMotif(Rng& rng, const Motif& base, std::uint32_t max_vertices,
                  std::string name) {
  std::vector<MotifEdge> edges = base.edges;
  std::uint32_t have = std::max<std::uint32_t>(base.num_vertices, 2);
  if (edges.empty()) {
    edges.push_back({0, 1});
  } else {
    edges.push_back(RandomExtension(rng, have, std::max<std::uint32_t>(max_vertices, 2)));
  }
  return Canonicalize(Motif::FromEdges(std::move(name), std::move(edges)));
}

Motif RandomMotif(Rng& rng, std::size_t max_edges, std::uint32_t max_vertices,
                  std::string name) {
  if (max_edges == 0) throw std::invalid_argument("max_edges must be >= 1");
  std::size_t size = Uniform(rng, 1, max_edges);
  Motif m = Motif::FromEdges(name, {{0, 1}});
  while (m.size() < size) m = ExtendMotif(rng, m, max_vertices, name);
  return m;
}

std::string_view ToString(GroupShape shape) {
  switch (shape) {
    case GroupShape::kDepth:
      return "depth";
    case GroupShape::kFanout:
      return "fanout";
    case GroupShape::kHeterogeneous:
      return "heterogeneous";
  }
  return "?";
}

std::vector<Motif> RandomGroup(Rng& rng, GroupShape shape, std::size_t size,
                               std::size_t max_edges) {
  size = std::max<std::size_t>(size, 2);
  max_edges = std::max<std::size_t>(max_edges, 2);
  constexpr std::uint32_t kMaxVertices = 4;
  std::vector<Motif> group;
  Motif prefix;
  if (shape == GroupShape::kFanout) {
    prefix = RandomMotif(rng, 2, kMaxVertices, "");
    while (prefix.size() < 2) prefix = ExtendMotif(rng, prefix, kMaxVertices, "");
  }
  for (int attempt = 0; attempt < 200 && group.size() < size; ++attempt) {
    Motif m;
    switch (shape) {
      case GroupShape::kDepth:
        // Each motif extends the previous one by a single edge.
        m = group.empty() ? RandomMotif(rng, 2, kMaxVertices, "")
                          : ExtendMotif(rng, group.back(), kMaxVertices, "");
        break;
      case GroupShape::kFanout:
        m = ExtendMotif(rng, prefix, kMaxVertices, "");
        if (m.size() < max_edges && Chance(rng, 0.4)) {
          m = ExtendMotif(rng, m, kMaxVertices, "");
        }
        break;
      case GroupShape::kHeterogeneous:
        m = RandomMotif(rng, max_edges, kMaxVertices, "");
        break;
    }
    if (!Contains(group, m)) group.push_back(std::move(m));
  }
  if (group.size() < 2) {
    throw std::runtime_error("could not generate a motif group");
  }
  Rename(group);
  return group;
}

std::string_view ToString(SyntheticMode mode) {
  switch (mode) {
    case SyntheticMode::kUniform:
      return "uniform";
    case SyntheticMode::kHub:
      return "hub";
    case SyntheticMode::kBipartite:
      return "bipartite";
    case SyntheticMode::kBurst:
      return "burst";
  }
  return "?";
}

std::optional<SyntheticMode> ParseSyntheticMode(std::string_view text) {
  if (text == "uniform") return SyntheticMode::kUniform;
  if (text == "hub") return SyntheticMode::kHub;
  if (text == "bipartite") return SyntheticMode::kBipartite;
  if (text == "burst") return SyntheticMode::kBurst;
  return std::nullopt;
}

std::vector<RawEdge> GenerateSynthetic(SyntheticMode mode,
                                       std::uint32_t num_vertices,
                                       std::size_t num_edges,
                                       std::uint64_t seed, Timestamp t_max) {
  if (num_vertices < 2) throw std::invalid_argument("need at least 2 vertices");
  Rng rng(seed);
  const auto tm = static_cast<std::uint64_t>(t_max);
  auto vertex = [&](std::uint32_t lo, std::uint32_t hi) {
    return static_cast<VertexId>(Uniform(rng, lo, hi));
  };
  std::vector<RawEdge> edges;
  edges.reserve(num_edges);

  switch (mode) {
    case SyntheticMode::kUniform:
      return RandomEdges(rng, num_vertices, num_edges, t_max, 0);
    case SyntheticMode::kHub:
      for (std::size_t i = 0; i < num_edges; ++i) {
        RawEdge e;
        if (Chance(rng, 0.9)) {
          VertexId other = vertex(1, num_vertices - 1);
          e = Chance(rng, 0.5) ? RawEdge{0, other, 0} : RawEdge{other, 0, 0};
          e.t = static_cast<Timestamp>(Uniform(rng, 0, tm / 10));
        } else {
          e.src = vertex(1, num_vertices - 1);
          do {
            e.dst = vertex(1, num_vertices - 1);
          } while (e.dst == e.src && num_vertices > 2);
          if (e.dst == e.src) e.dst = 0;
          e.t = static_cast<Timestamp>(Uniform(rng, 0, tm));
        }
        edges.push_back(e);
      }
      break;
    case SyntheticMode::kBipartite: {
      const std::uint32_t half = num_vertices / 2;
      for (std::size_t i = 0; i < num_edges; ++i) {
        VertexId left = vertex(0, half - 1);
        VertexId right = vertex(half, num_vertices - 1);
        RawEdge e = Chance(rng, 0.5) ? RawEdge{left, right, 0}
                                     : RawEdge{right, left, 0};
        e.t = static_cast<Timestamp>(Uniform(rng, 0, tm));
        edges.push_back(e);
      }
      break;
    }
    case SyntheticMode::kBurst: {
      const std::size_t bursts = std::max<std::size_t>(4, num_edges / 2000);
      std::vector<std::uint64_t> centers(bursts);
      for (auto& c : centers) c = Uniform(rng, 0, tm);
      const std::uint64_t width = std::max<std::uint64_t>(1, tm / (bursts * 50));
      for (std::size_t i = 0; i < num_edges; ++i) {
        RawEdge e;
        e.src = vertex(0, num_vertices - 1);
        do {
          e.dst = vertex(0, num_vertices - 1);
        } while (e.dst == e.src);
        std::uint64_t c = centers[Uniform(rng, 0, bursts - 1)];
        std::uint64_t off = Uniform(rng, 0, 2 * width);
        std::uint64_t t = c + off > width ? c + off - width : 0;
        e.t = static_cast<Timestamp>(std::min(t, tm));
        edges.push_back(e);
      }
      break;
    }
  }
  return edges;
}

}  // namespace comine
