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
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace comine {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
using Timestamp = std::int64_t;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();
inline constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();
inline constexpr Timestamp kMaxTimestamp = std::numeric_limits<Timestamp>::max();
inline constexpr Timestamp kMinTimestamp = std::numeric_limits<Timestamp>::min();

// An edge as read from input, before global ordering.
struct RawEdge {
  VertexId src = 0;
  VertexId dst = 0;
  Timestamp t = 0;

  friend bool operator==(const RawEdge&, const RawEdge&) = default;
};

// Edge with its dense id. Ids follow the total order (t, input rank).
struct TemporalEdge {
  EdgeId id = 0;
  VertexId src = 0;
  VertexId dst = 0;
  Timestamp t = 0;
};

struct EdgeList {
  std::vector<RawEdge> edges;
  // Interned vertex labels, indexed by dense vertex id.
  std::vector<std::string> labels;
  // Timestamps were multiplied by 10^scale while parsing.
  int scale = 0;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class GraphIoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parses "src dst t" lines (whitespace or comma separated). '#' lines are
// comments, except an optional "#scale <k>" header before the first edge,
// which declares that timestamps carry up to k decimal digits.
EdgeList ParseEdgeList(std::istream& in);

// Exact decimal-to-integer conversion: value * 10^scale. With truncate=false
// any nonzero digit beyond `scale` fractional places is rejected; with
// truncate=true the value is floored instead. Returns nullopt on malformed
// text or overflow.
std::optional<Timestamp> ParseScaledNumber(std::string_view text, int scale,
                                           bool truncate = false);

// Half-open positions into one of the graph's candidate arrays.
enum class CandidateSource : std::uint8_t { kAllEdges, kOutOf, kInOf };

struct CandidateRange {
  CandidateSource source = CandidateSource::kAllEdges;
  std::uint32_t begin = 0;
  std::uint32_t end = 0;

  std::uint32_t size() const { return end > begin ? end - begin : 0; }
  bool empty() const { return end <= begin; }
};

// Immutable time-ordered temporal graph with CSR out- and in-indices. Each
// adjacency list is sorted by edge id, which is also (t, input rank) order.
class TemporalGraph {
 public:
  TemporalGraph() = default;

  std::size_t num_vertices() const { return num_vertices_; }
  std::size_t num_edges() const { return edges_.size(); }

  const TemporalEdge& edge(EdgeId id) const { return edges_[id]; }
  std::span<const TemporalEdge> edges() const { return edges_; }
  Timestamp time(EdgeId id) const { return times_[id]; }

  std::span<const EdgeId> out_edges(VertexId u) const {
    return {out_edges_.data() + out_offsets_[u],
            out_edges_.data() + out_offsets_[u + 1]};
  }
  std::span<const EdgeId> in_edges(VertexId v) const {
    return {in_edges_.data() + in_offsets_[v],
            in_edges_.data() + in_offsets_[v + 1]};
  }

  // Candidates adjacent to `vertex` (out- or in-edges for kOutOf / kInOf, the
  // whole edge list for kAllEdges) whose id is greater than `after` and whose
  // timestamp is at most `t_max`. Pass kNoEdge as `after` for no lower bound.
  CandidateRange RangeAfter(CandidateSource source, VertexId vertex,
                            EdgeId after, Timestamp t_max) const;

  EdgeId CandidateAt(CandidateSource source, std::uint32_t pos) const {
    switch (source) {
      case CandidateSource::kOutOf:
        return out_edges_[pos];
      case CandidateSource::kInOf:
        return in_edges_[pos];
      case CandidateSource::kAllEdges:
        break;
    }
    return pos;
  }

  // Latest minus earliest timestamp; 0 for graphs with fewer than 2 edges.
  Timestamp time_span() const;

  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(VertexId v) const;
  int scale() const { return scale_; }

  friend TemporalGraph BuildIndexedGraph(std::span<const RawEdge> raw,
                                         std::size_t min_vertices);
  friend TemporalGraph BuildIndexedGraph(EdgeList list);
  friend TemporalGraph LoadGraphCache(std::istream& in);

 private:
  void BuildIndex();

  std::size_t num_vertices_ = 0;
  std::vector<TemporalEdge> edges_;
  std::vector<Timestamp> times_;
  std::vector<std::uint32_t> out_offsets_{0};
  std::vector<EdgeId> out_edges_;
  std::vector<Timestamp> out_times_;
  std::vector<std::uint32_t> in_offsets_{0};
  std::vector<EdgeId> in_edges_;
  std::vector<Timestamp> in_times_;
  std::vector<std::string> labels_;
  int scale_ = 0;
};

// Stable-sorts by timestamp (ties keep input order) and assigns dense ids.
// The vertex count is max(min_vertices, largest endpoint + 1).
TemporalGraph BuildIndexedGraph(std::span<const RawEdge> raw,
                                std::size_t min_vertices = 0);
TemporalGraph BuildIndexedGraph(EdgeList list);

// Out-edges of u with t_min < t <= t_max, in nondecreasing (t, id) order.
std::span<const EdgeId> NeighborsAfter(const TemporalGraph& g, VertexId u,
                                       Timestamp t_min, Timestamp t_max);

// 2-coloring of the undirected projection, or nullopt if an odd cycle exists.
// Self-loops make a graph non-bipartite.
std::optional<std::vector<std::uint8_t>> DetectBipartite(
    const TemporalGraph& g);

// Reads an edge-list file. Throws GraphIoError when the file cannot be opened
// and ParseError on malformed content.
TemporalGraph LoadGraphFile(const std::string& path);

// Versioned binary snapshot of a built graph. Loading skips the sort.
void SaveGraphCache(const TemporalGraph& g, std::ostream& out);
TemporalGraph LoadGraphCache(std::istream& in);

// LoadGraphFile through a cache at `cache_path`: reads the cache when it is
// valid, otherwise parses `path` and rewrites the cache.
TemporalGraph LoadGraphCached(const std::string& path,
                              const std::string& cache_path);

}  // namespace comine
