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
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "comine/graph.h"
#include "comine/motif.h"

namespace comine {

using NodeIndex = std::size_t;

// One node of a motif-group tree. `common` is a prefix of the common motif of
// every descendant; `query` names the group motif this node counts, if any.
struct MGNode {
  // Intermediate nodes get sequential gids in creation order; leaves inserted
  // directly for a single motif are keyed by the motif name instead.
  std::optional<std::uint32_t> gid;
  Motif common;
  std::vector<NodeIndex> children;
  std::optional<std::size_t> query;  // index into MGTree::motifs

  bool is_leaf() const { return children.empty(); }
};

struct MGTree {
  std::vector<Motif> motifs;
  std::vector<MGNode> nodes;
  NodeIndex root = 0;

  std::size_t node_count() const { return nodes.size(); }
  // parent[root] == nodes.size().
  std::vector<NodeIndex> Parents() const;
  // Longest common motif in the tree.
  std::size_t MaxDepth() const;
  // Largest motif vertex id + 1 over all nodes.
  std::uint32_t MaxVertices() const;
  std::string NodeLabel(NodeIndex n) const;
};

// Groups motifs by shared edge prefixes, rank by rank. Motifs are expected to
// be canonical so that equal prefixes have equal labels; identical edge
// sequences or an empty group throw std::invalid_argument.
MGTree ConstructMGTree(std::vector<Motif> group);

struct TreeViolation {
  enum class Kind {
    kPrefixMismatch,
    kNotExtending,
    kDuplicateExtension,
    kQueryMismatch,
    kLeafWithoutQuery,
    kCoverage,
    kStructure,
  };
  Kind kind;
  NodeIndex node;
  std::optional<std::uint32_t> rank;  // 1-based edge rank, when relevant
  std::string message;
};

std::vector<TreeViolation> ValidateTree(const MGTree& tree,
                                        std::span<const Motif> group);

// 1 - sum_N(|C_N| - |C_parent(N)|) / sum_M |M|, with the root's parent
// contributing zero edges.
double SimilarityMetric(std::span<const Motif> group, const MGTree& tree);

inline constexpr double kCoMiningSimilarityThreshold = 0.44;

struct CoMiningDecision {
  bool co_mine = false;
  double similarity = 0;
  bool bipartite = false;
  // δ relative to the graph's time span; advisory only.
  double delta_fraction_of_span = 0;
  std::vector<std::string> reasons;
};

// Pure decision rule: bipartite graphs always co-mine, otherwise co-mine iff
// the similarity reaches the threshold.
bool DecideCoMining(bool bipartite, double similarity);

CoMiningDecision CoMiningHeuristic(const TemporalGraph& g,
                                   std::span<const Motif> group,
                                   const MGTree& tree, Timestamp delta);

nlohmann::ordered_json ToJson(const CoMiningDecision& decision);

// Indented outline, one node per line.
std::string DumpOutline(const MGTree& tree);
// Graphviz digraph.
std::string DumpDot(const MGTree& tree);

}  // namespace comine
