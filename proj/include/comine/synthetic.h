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
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "comine/graph.h"
#include "comine/motif.h"

namespace comine {

using Rng = std::mt19937_64;

// Uniform random multigraph; timestamps uniform in [0, t_max] (ties allowed).
// A small fraction of self-loops is mixed in so that rejection paths run.
std::vector<RawEdge> RandomEdges(Rng& rng, std::uint32_t num_vertices,
                                 std::size_t num_edges, Timestamp t_max,
                                 double self_loop_prob = 0.02);

// Connected canonical motif with 1..max_edges edges and at most max_vertices
// vertices (max_vertices >= 2).
Motif RandomMotif(Rng& rng, std::size_t max_edges, std::uint32_t max_vertices,
                  std::string name);

// `base` plus one random edge touching its vertex set.
Motif ExtendMotif(Rng& rng, const Motif& base, std::uint32_t max_vertices,
                  std::string name);

enum class GroupShape { kDepth, kFanout, kHeterogeneous };
std::string_view ToString(GroupShape shape);

// 2..`size` distinct canonical motifs named m0, m1, ...
//   depth: a chain of successive one-edge extensions
//   fanout: one shared prefix with several different continuations
//   heterogeneous: independent motifs with up to max_edges edges
std::vector<Motif> RandomGroup(Rng& rng, GroupShape shape, std::size_t size,
                               std::size_t max_edges);

enum class SyntheticMode { kUniform, kHub, kBipartite, kBurst };
std::string_view ToString(SyntheticMode mode);
std::optional<SyntheticMode> ParseSyntheticMode(std::string_view text);

// Bench graphs:
//   uniform: random endpoints, uniform times
//   hub: ~90% of edges touch vertex 0 and fall in the first tenth of the span
//   bipartite: edges only between the two halves of the vertex set
//   burst: times clustered around a few random instants
std::vector<RawEdge> GenerateSynthetic(SyntheticMode mode,
                                       std::uint32_t num_vertices,
                                       std::size_t num_edges,
                                       std::uint64_t seed,
                                       Timestamp t_max = 1'000'000);

}  // namespace comine
