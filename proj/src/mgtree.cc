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

#include "comine/mgtree.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace comine {

namespace {

class TreeBuilder {
 public:
  explicit TreeBuilder(MGTree* tree) : tree_(*tree) {}

  NodeIndex NewIntermediate() {
    MGNode node;
    node.gid = next_gid_++;
    tree_.nodes.push_back(std::move(node));
    return tree_.nodes.size() - 1;
  }

  NodeIndex NewLeaf(std::size_t motif) {
    MGNode node;
    node.common = tree_.motifs[motif];
    node.query = motif;
    tree_.nodes.push_back(std::move(node));
    return tree_.nodes.size() - 1;
  }

  void InsertChild(NodeIndex parent, NodeIndex child) {
    if (parent != child) tree_.nodes[parent].children.push_back(child);
  }

  // Groups `members` by their edge at rank T (1-based). A group that keeps
  // every member reuses `parent`; a singleton becomes a leaf; anything else
  // gets a fresh intermediate node. A member ending exactly at rank T is the
  // query of the node whose common motif is its T-prefix.
  void CreateTree(std::uint32_t rank, NodeIndex parent,
                  const std::vector<std::size_t>& members) {
    std::vector<std::pair<MotifEdge, std::vector<std::size_t>>> groups;
    for (std::size_t m : members) {
      const Motif& motif = tree_.motifs[m];
      if (motif.size() < rank) continue;
      const MotifEdge& e = motif.edges[rank - 1];
      auto it = std::find_if(groups.begin(), groups.end(),
                             [&](const auto& g) { return g.first == e; });
      if (it == groups.end()) {
        groups.push_back({e, {m}});
      } else {
        it->second.push_back(m);
      }
    }

    for (const auto& [edge, child_group] : groups) {
      if (child_group.size() == 1) {
        InsertChild(parent, NewLeaf(child_group.front()));
        continue;
      }
      std::optional<std::size_t> exhausted;
      for (std::size_t m : child_group) {
        if (tree_.motifs[m].size() == rank) {
          exhausted = m;
          break;
        }
      }
      NodeIndex child = child_group == members ? parent : NewIntermediate();
      MGNode& node = tree_.nodes[child];
      node.common = tree_.motifs[child_group.front()].Prefix(rank);
      node.query = exhausted;
      InsertChild(parent, child);
      CreateTree(rank + 1, child, child_group);
    }
  }

 private:
  MGTree& tree_;
  std::uint32_t next_gid_ = 0;
};

std::string QuoteDot(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::vector<NodeIndex> MGTree::Parents() const {
  std::vector<NodeIndex> parent(nodes.size(), nodes.size());
  for (NodeIndex n = 0; n < nodes.size(); ++n) {
    for (NodeIndex c : nodes[n].children) {
      if (c < nodes.size()) parent[c] = n;
    }
  }
  return parent;
}

std::size_t MGTree::MaxDepth() const {
  std::size_t depth = 0;
  for (const MGNode& n : nodes) depth = std::max(depth, n.common.size());
  return depth;
}

std::uint32_t MGTree::MaxVertices() const {
  std::uint32_t v = 0;
  for (const MGNode& n : nodes) v = std::max(v, n.common.num_vertices);
  return v;
}

std::string MGTree::NodeLabel(NodeIndex n) const {
  const MGNode& node = nodes[n];
  if (node.gid) return "#" + std::to_string(*node.gid);
  if (node.query && *node.query < motifs.size()) return motifs[*node.query].name;
  return "?" + std::to_string(n);
}

MGTree ConstructMGTree(std::vector<Motif> group) {
  if (group.empty()) {
    throw std::invalid_argument("motif group is empty");
  }
  for (std::size_t i = 0; i < group.size(); ++i) {
    if (group[i].empty()) {
      throw std::invalid_argument("motif '" + group[i].name + "' has no edges");
    }
    if (group[i].HasSelfLoop()) {
      throw std::invalid_argument("motif '" + group[i].name +
                                  "' has a self-loop edge");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (group[i].SameEdges(group[j])) {
        throw std::invalid_argument("motif '" + group[i].name +
                                    "' duplicates motif '" + group[j].name +
                                    "'");
      }
    }
  }

  MGTree tree;
  tree.motifs = std::move(group);
  TreeBuilder builder(&tree);
  if (tree.motifs.size() == 1) {
    tree.root = builder.NewLeaf(0);
    return tree;
  }
  tree.root = builder.NewIntermediate();
  std::vector<std::size_t> all(tree.motifs.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  builder.CreateTree(1, tree.root, all);
  return tree;
}

std::vector<TreeViolation> ValidateTree(const MGTree& tree,
                                        std::span<const Motif> group) {
  using Kind = TreeViolation::Kind;
  std::vector<TreeViolation> out;
  if (tree.root >= tree.nodes.size()) {
    out.push_back({Kind::kStructure, tree.root, std::nullopt, "missing root"});
    return out;
  }

  std::vector<int> seen(tree.nodes.size(), 0);
  std::vector<NodeIndex> stack{tree.root};
  std::vector<std::size_t> refs(tree.motifs.size(), 0);
  while (!stack.empty()) {
    NodeIndex n = stack.back();
    stack.pop_back();
    if (seen[n]++ > 0) {
      out.push_back({Kind::kStructure, n, std::nullopt,
                     "node " + tree.NodeLabel(n) + " reached twice"});
      continue;
    }
    const MGNode& node = tree.nodes[n];
    if (node.query) {
      if (*node.query >= tree.motifs.size()) {
        out.push_back({Kind::kStructure, n, std::nullopt,
                       "node " + tree.NodeLabel(n) + " has a dangling query"});
      } else {
        ++refs[*node.query];
        if (!tree.motifs[*node.query].SameEdges(node.common)) {
          out.push_back({Kind::kQueryMismatch, n, std::nullopt,
                         "node " + tree.NodeLabel(n) + " query '" +
                             tree.motifs[*node.query].name +
                             "' differs from its common motif"});
        }
      }
    } else if (node.is_leaf()) {
      out.push_back({Kind::kLeafWithoutQuery, n, std::nullopt,
                     "leaf " + tree.NodeLabel(n) + " has no query"});
    }

    std::set<MotifEdge> extensions;
    const std::size_t plen = node.common.size();
    for (auto it = node.children.rbegin(); it != node.children.rend(); ++it) {
      if (*it >= tree.nodes.size()) {
        out.push_back({Kind::kStructure, n, std::nullopt,
                       "node " + tree.NodeLabel(n) + " has a dangling child"});
        continue;
      }
      stack.push_back(*it);
    }
    for (NodeIndex c : node.children) {
      if (c >= tree.nodes.size()) continue;
      const Motif& child = tree.nodes[c].common;
      if (child.size() <= plen) {
        out.push_back({Kind::kNotExtending, c, std::nullopt,
                       "child " + tree.NodeLabel(c) +
                           " does not extend its parent " + tree.NodeLabel(n)});
        continue;
      }
      for (std::size_t i = 0; i < plen; ++i) {
        if (child.edges[i] != node.common.edges[i]) {
          auto rank = static_cast<std::uint32_t>(i + 1);
          out.push_back({Kind::kPrefixMismatch, c, rank,
                         "child " + tree.NodeLabel(c) + " differs from parent " +
                             tree.NodeLabel(n) + " at edge rank " +
                             std::to_string(rank)});
          break;
        }
      }
      if (!extensions.insert(child.edges[plen]).second) {
        out.push_back({Kind::kDuplicateExtension, c,
                       static_cast<std::uint32_t>(plen + 1),
                       "children of " + tree.NodeLabel(n) +
                           " share the extension edge at rank " +
                           std::to_string(plen + 1)});
      }
    }
  }
  for (NodeIndex n = 0; n < tree.nodes.size(); ++n) {
    if (seen[n] == 0) {
      out.push_back({Kind::kStructure, n, std::nullopt,
                     "node " + tree.NodeLabel(n) + " is unreachable"});
    }
  }

  for (const Motif& m : group) {
    std::size_t covered = 0;
    for (std::size_t q = 0; q < tree.motifs.size(); ++q) {
      if (tree.motifs[q].name == m.name && tree.motifs[q].SameEdges(m)) {
        covered += refs[q];
      }
    }
    if (covered != 1) {
      out.push_back({Kind::kCoverage, tree.root, std::nullopt,
                     "motif '" + m.name + "' is the query of " +
                         std::to_string(covered) + " nodes"});
    }
  }
  for (std::size_t q = 0; q < tree.motifs.size(); ++q) {
    if (refs[q] == 0) continue;
    bool in_group = std::any_of(group.begin(), group.end(), [&](const Motif& m) {
      return m.name == tree.motifs[q].name && m.SameEdges(tree.motifs[q]);
    });
    if (!in_group) {
      out.push_back({Kind::kCoverage, tree.root, std::nullopt,
                     "query '" + tree.motifs[q].name + "' is not in the group"});
    }
  }
  return out;
}

double SimilarityMetric(std::span<const Motif> group, const MGTree& tree) {
  std::size_t total = 0;
  for (const Motif& m : group) total += m.size();
  if (total == 0) return 0;
  std::vector<NodeIndex> parent = tree.Parents();
  std::size_t incremental = 0;
  for (NodeIndex n = 0; n < tree.nodes.size(); ++n) {
    std::size_t own = tree.nodes[n].common.size();
    std::size_t base =
        parent[n] < tree.nodes.size() ? tree.nodes[parent[n]].common.size() : 0;
    incremental += own > base ? own - base : 0;
  }
  return 1.0 - static_cast<double>(incremental) / static_cast<double>(total);
}

bool DecideCoMining(bool bipartite, double similarity) {
  return bipartite || similarity >= kCoMiningSimilarityThreshold;
}

CoMiningDecision CoMiningHeuristic(const TemporalGraph& g,
                                   std::span<const Motif> group,
                                   const MGTree& tree, Timestamp delta) {
  CoMiningDecision d;
  d.similarity = SimilarityMetric(group, tree);
  d.bipartite = DetectBipartite(g).has_value();
  d.co_mine = DecideCoMining(d.bipartite, d.similarity);
  Timestamp span = g.time_span();
  d.delta_fraction_of_span =
      span > 0 ? static_cast<double>(delta) / static_cast<double>(span)
               : std::nan("");

  char buf[128];
  if (d.bipartite) {
    d.reasons.emplace_back("graph is bipartite");
  }
  std::snprintf(buf, sizeof(buf), "similarity %.4f %s %.2f", d.similarity,
                d.similarity >= kCoMiningSimilarityThreshold ? ">=" : "<",
                kCoMiningSimilarityThreshold);
  d.reasons.emplace_back(buf);
  if (std::isfinite(d.delta_fraction_of_span)) {
    std::snprintf(buf, sizeof(buf),
                  "advisory: delta is %.3g of the time span; shorter windows "
                  "favour co-mining",
                  d.delta_fraction_of_span);
    d.reasons.emplace_back(buf);
  }
  return d;
}

nlohmann::ordered_json ToJson(const CoMiningDecision& decision) {
  nlohmann::ordered_json j;
  j["decision"] = decision.co_mine ? "co_mine" : "mine_individually";
  j["similarity"] = decision.similarity;
  j["threshold"] = kCoMiningSimilarityThreshold;
  j["bipartite"] = decision.bipartite;
  if (std::isfinite(decision.delta_fraction_of_span)) {
    j["delta_fraction_of_span"] = decision.delta_fraction_of_span;
  } else {
    j["delta_fraction_of_span"] = nullptr;
  }
  j["reasons"] = decision.reasons;
  return j;
}

std::string DumpOutline(const MGTree& tree) {
  std::ostringstream out;
  auto visit = [&](auto&& self, NodeIndex n, int depth) -> void {
    const MGNode& node = tree.nodes[n];
    out << std::string(2 * depth, ' ') << tree.NodeLabel(n) << ' ';
    if (node.common.empty()) {
      out << "ε";
    } else {
      out << '[' << node.common.EdgeString() << ']';
    }
    if (node.query) out << " query=" << tree.motifs[*node.query].name;
    out << '\n';
    for (NodeIndex c : node.children) self(self, c, depth + 1);
  };
  if (tree.root < tree.nodes.size()) visit(visit, tree.root, 0);
  return out.str();
}

std::string DumpDot(const MGTree& tree) {
  std::ostringstream out;
  out << "digraph mgtree {\n  node [shape=box];\n";
  auto visit = [&](auto&& self, NodeIndex n) -> void {
    const MGNode& node = tree.nodes[n];
    std::string label = tree.NodeLabel(n) + "\\n" +
                        (node.common.empty() ? "ε" : node.common.EdgeString());
    if (node.query) label += "\\nquery=" + tree.motifs[*node.query].name;
    out << "  n" << n << " [label=" << QuoteDot(label) << "];\n";
    for (NodeIndex c : node.children) {
      out << "  n" << n << " -> n" << c << ";\n";
      self(self, c);
    }
  };
  if (tree.root < tree.nodes.size()) visit(visit, tree.root);
  out << "}\n";
  return out.str();
}

}  // namespace comine
