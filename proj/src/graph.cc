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

#include "comine/graph.h"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstring>
#include <deque>
#include <filesystem>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <unordered_map>

namespace comine {

namespace {

constexpr std::array<char, 8> kCacheMagic = {'C', 'M', 'T', 'G',
                                             'I', 'D', 'X', '\0'};
constexpr std::uint32_t kCacheVersion = 1;

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                        s.back() == '\r' || s.back() == '\n')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                               line[i] == ',' || line[i] == '\r')) {
      ++i;
    }
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' &&
           line[j] != ',' && line[j] != '\r') {
      ++j;
    }
    if (j > i) fields.push_back(line.substr(i, j - i));
    i = j;
  }
  return fields;
}

bool CheckedMulAdd(Timestamp acc, int digit, Timestamp* out) {
  Timestamp scaled;
  if (__builtin_mul_overflow(acc, Timestamp{10}, &scaled)) return false;
  return !__builtin_add_overflow(scaled, Timestamp{digit}, out);
}

template <typename T>
void WritePod(std::ostream& out, const T& v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
bool ReadPod(std::istream& in, T* v) {
  in.read(reinterpret_cast<char*>(v), sizeof(T));
  return static_cast<bool>(in);
}

}  // namespace

std::optional<Timestamp> ParseScaledNumber(std::string_view text, int scale,
                                           bool truncate) {
  if (scale < 0 || scale > 18) return std::nullopt;
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  std::string_view int_part = text;
  std::string_view frac_part;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    int_part = text.substr(0, dot);
    frac_part = text.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) return std::nullopt;
  auto all_digits = [](std::string_view s) {
    return std::all_of(s.begin(), s.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
  };
  if (!all_digits(int_part) || !all_digits(frac_part)) return std::nullopt;

  Timestamp value = 0;
  for (char c : int_part) {
    if (!CheckedMulAdd(value, c - '0', &value)) return std::nullopt;
  }
  for (int i = 0; i < scale; ++i) {
    int digit = i < static_cast<int>(frac_part.size()) ? frac_part[i] - '0' : 0;
    if (!CheckedMulAdd(value, digit, &value)) return std::nullopt;
  }
  bool dropped_nonzero = false;
  for (std::size_t i = scale; i < frac_part.size(); ++i) {
    if (frac_part[i] != '0') dropped_nonzero = true;
  }
  if (dropped_nonzero && !truncate) return std::nullopt;
  if (negative) {
    value = -value;
    // Flooring a negative value moves away from zero.
    if (dropped_nonzero) {
      if (value == kMinTimestamp) return std::nullopt;
      --value;
    }
  }
  return value;
}

EdgeList ParseEdgeList(std::istream& in) {
  EdgeList list;
  std::unordered_map<std::string, VertexId> interned;
  auto intern = [&](std::string_view token) {
    auto [it, inserted] = interned.try_emplace(
        std::string(token), static_cast<VertexId>(list.labels.size()));
    if (inserted) list.labels.emplace_back(token);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = Trim(line);
    if (view.empty()) continue;
    if (view.front() == '#') {
      std::string_view body = Trim(view.substr(1));
      if (body.starts_with("scale") &&
          (body.size() == 5 || body[5] == ' ' || body[5] == '\t')) {
        if (!list.edges.empty()) {
          throw ParseError(line_no, "#scale must precede the first edge");
        }
        std::string_view arg = Trim(body.substr(5));
        int scale = -1;
        auto [ptr, ec] =
            std::from_chars(arg.data(), arg.data() + arg.size(), scale);
        if (ec != std::errc() || ptr != arg.data() + arg.size() || scale < 0 ||
            scale > 18) {
          throw ParseError(line_no, "invalid #scale value '" +
                                        std::string(arg) + "'");
        }
        list.scale = scale;
      }
      continue;
    }
    auto fields = SplitFields(view);
    if (fields.size() != 3) {
      throw ParseError(line_no, "expected 3 fields (src dst t), got " +
                                    std::to_string(fields.size()));
    }
    auto t = ParseScaledNumber(fields[2], list.scale);
    if (!t) {
      throw ParseError(line_no, "invalid timestamp '" +
                                    std::string(fields[2]) + "'");
    }
    VertexId src = intern(fields[0]);
    VertexId dst = intern(fields[1]);
    list.edges.push_back({src, dst, *t});
  }
  return list;
}

TemporalGraph BuildIndexedGraph(std::span<const RawEdge> raw,
                                std::size_t min_vertices) {
  TemporalGraph g;
  std::size_t n = min_vertices;
  for (const RawEdge& e : raw) {
    n = std::max<std::size_t>(n, std::max(e.src, e.dst) + std::size_t{1});
  }
  g.num_vertices_ = n;

  std::vector<std::uint32_t> order(raw.size());
  std::iota(order.begin(), order.end(), 0u);
  bool sorted = std::is_sorted(
      raw.begin(), raw.end(),
      [](const RawEdge& a, const RawEdge& b) { return a.t < b.t; });
  if (!sorted) {
    std::stable_sort(order.begin(), order.end(),
                     [&](std::uint32_t a, std::uint32_t b) {
                       return raw[a].t < raw[b].t;
                     });
  }
  g.edges_.reserve(raw.size());
  g.times_.reserve(raw.size());
  for (std::uint32_t i = 0; i < order.size(); ++i) {
    const RawEdge& e = raw[order[i]];
    g.edges_.push_back({i, e.src, e.dst, e.t});
    g.times_.push_back(e.t);
  }
  g.BuildIndex();
  return g;
}

TemporalGraph BuildIndexedGraph(EdgeList list) {
  TemporalGraph g = BuildIndexedGraph(list.edges, list.labels.size());
  g.labels_ = std::move(list.labels);
  g.scale_ = list.scale;
  return g;
}

void TemporalGraph::BuildIndex() {
  const std::size_t n = num_vertices_;
  out_offsets_.assign(n + 1, 0);
  in_offsets_.assign(n + 1, 0);
  for (const TemporalEdge& e : edges_) {
    ++out_offsets_[e.src + 1];
    ++in_offsets_[e.dst + 1];
  }
  std::partial_sum(out_offsets_.begin(), out_offsets_.end(),
                   out_offsets_.begin());
  std::partial_sum(in_offsets_.begin(), in_offsets_.end(),
                   in_offsets_.begin());
  out_edges_.resize(edges_.size());
  out_times_.resize(edges_.size());
  in_edges_.resize(edges_.size());
  in_times_.resize(edges_.size());
  std::vector<std::uint32_t> out_fill(out_offsets_.begin(),
                                      out_offsets_.end() - 1);
  std::vector<std::uint32_t> in_fill(in_offsets_.begin(), in_offsets_.end() - 1);
  // Filling in id order keeps every list sorted by (t, id).
  for (const TemporalEdge& e : edges_) {
    std::uint32_t o = out_fill[e.src]++;
    out_edges_[o] = e.id;
    out_times_[o] = e.t;
    std::uint32_t i = in_fill[e.dst]++;
    in_edges_[i] = e.id;
    in_times_[i] = e.t;
  }
}

CandidateRange TemporalGraph::RangeAfter(CandidateSource source,
                                         VertexId vertex, EdgeId after,
                                         Timestamp t_max) const {
  const EdgeId* ids = nullptr;
  const Timestamp* times = nullptr;
  std::uint32_t base = 0;
  std::uint32_t limit = 0;
  switch (source) {
    case CandidateSource::kAllEdges:
      base = 0;
      limit = static_cast<std::uint32_t>(edges_.size());
      times = times_.data();
      break;
    case CandidateSource::kOutOf:
      base = out_offsets_[vertex];
      limit = out_offsets_[vertex + 1];
      ids = out_edges_.data();
      times = out_times_.data();
      break;
    case CandidateSource::kInOf:
      base = in_offsets_[vertex];
      limit = in_offsets_[vertex + 1];
      ids = in_edges_.data();
      times = in_times_.data();
      break;
  }
  std::uint32_t lo = base;
  if (after != kNoEdge) {
    if (ids == nullptr) {
      lo = std::min<std::uint32_t>(after + 1, limit);
    } else {
      lo = static_cast<std::uint32_t>(
          std::upper_bound(ids + base, ids + limit, after) - ids);
    }
  }
  std::uint32_t hi = limit;
  if (t_max != kMaxTimestamp) {
    hi = static_cast<std::uint32_t>(
        std::upper_bound(times + lo, times + limit, t_max) - times);
  }
  return {source, lo, std::max(lo, hi)};
}

Timestamp TemporalGraph::time_span() const {
  if (times_.size() < 2) return 0;
  return times_.back() - times_.front();
}

std::string TemporalGraph::label(VertexId v) const {
  if (v < labels_.size()) return labels_[v];
  return std::to_string(v);
}

std::span<const EdgeId> NeighborsAfter(const TemporalGraph& g, VertexId u,
                                       Timestamp t_min, Timestamp t_max) {
  std::span<const EdgeId> out = g.out_edges(u);
  if (t_min >= t_max) return out.subspan(0, 0);
  auto first = std::partition_point(out.begin(), out.end(), [&](EdgeId e) {
    return g.time(e) <= t_min;
  });
  auto last = std::partition_point(first, out.end(), [&](EdgeId e) {
    return g.time(e) <= t_max;
  });
  return {first, last};
}

std::optional<std::vector<std::uint8_t>> DetectBipartite(
    const TemporalGraph& g) {
  constexpr std::uint8_t kUncolored = 2;
  std::vector<std::uint8_t> color(g.num_vertices(), kUncolored);
  std::deque<VertexId> queue;
  for (VertexId start = 0; start < g.num_vertices(); ++start) {
    if (color[start] != kUncolored) continue;
    color[start] = 0;
    queue.push_back(start);
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop_front();
      auto visit = [&](VertexId w) {
        if (color[w] == kUncolored) {
          color[w] = color[v] ^ 1;
          queue.push_back(w);
          return true;
        }
        return color[w] != color[v];
      };
      for (EdgeId e : g.out_edges(v)) {
        if (!visit(g.edge(e).dst)) return std::nullopt;
      }
      for (EdgeId e : g.in_edges(v)) {
        if (!visit(g.edge(e).src)) return std::nullopt;
      }
    }
  }
  return color;
}

TemporalGraph LoadGraphFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphIoError("cannot open graph file '" + path + "'");
  return BuildIndexedGraph(ParseEdgeList(in));
}

void SaveGraphCache(const TemporalGraph& g, std::ostream& out) {
  out.write(kCacheMagic.data(), kCacheMagic.size());
  WritePod(out, kCacheVersion);
  WritePod(out, static_cast<std::int32_t>(g.scale()));
  WritePod(out, static_cast<std::uint64_t>(g.num_vertices()));
  WritePod(out, static_cast<std::uint64_t>(g.num_edges()));
  for (const TemporalEdge& e : g.edges()) {
    WritePod(out, e.src);
    WritePod(out, e.dst);
    WritePod(out, e.t);
  }
  WritePod(out, static_cast<std::uint64_t>(g.labels().size()));
  for (const std::string& label : g.labels()) {
    WritePod(out, static_cast<std::uint64_t>(label.size()));
    out.write(label.data(), static_cast<std::streamsize>(label.size()));
  }
}

TemporalGraph LoadGraphCache(std::istream& in) {
  std::array<char, 8> magic{};
  in.read(magic.data(), magic.size());
  if (!in || magic != kCacheMagic) {
    throw GraphIoError("graph cache: bad magic");
  }
  std::uint32_t version = 0;
  std::int32_t scale = 0;
  std::uint64_t num_vertices = 0;
  std::uint64_t num_edges = 0;
  if (!ReadPod(in, &version) || version != kCacheVersion) {
    throw GraphIoError("graph cache: unsupported version");
  }
  if (!ReadPod(in, &scale) || !ReadPod(in, &num_vertices) ||
      !ReadPod(in, &num_edges) || num_edges > kNoEdge ||
      num_vertices > kNoVertex) {
    throw GraphIoError("graph cache: truncated header");
  }
  EdgeList list;
  list.scale = scale;
  list.edges.resize(num_edges);
  for (RawEdge& e : list.edges) {
    if (!ReadPod(in, &e.src) || !ReadPod(in, &e.dst) || !ReadPod(in, &e.t) ||
        e.src >= num_vertices || e.dst >= num_vertices) {
      throw GraphIoError("graph cache: corrupt edge table");
    }
  }
  std::uint64_t num_labels = 0;
  if (!ReadPod(in, &num_labels) || num_labels > num_vertices) {
    throw GraphIoError("graph cache: corrupt label table");
  }
  list.labels.resize(num_labels);
  for (std::string& label : list.labels) {
    std::uint64_t len = 0;
    if (!ReadPod(in, &len) || len > (1u << 20)) {
      throw GraphIoError("graph cache: corrupt label table");
    }
    label.resize(len);
    in.read(label.data(), static_cast<std::streamsize>(len));
    if (!in) throw GraphIoError("graph cache: corrupt label table");
  }
  if (!std::is_sorted(list.edges.begin(), list.edges.end(),
                      [](const RawEdge& a, const RawEdge& b) {
                        return a.t < b.t;
                      })) {
    throw GraphIoError("graph cache: edges out of order");
  }
  TemporalGraph g = BuildIndexedGraph(list.edges, num_vertices);
  g.labels_ = std::move(list.labels);
  g.scale_ = scale;
  return g;
}

TemporalGraph LoadGraphCached(const std::string& path,
                              const std::string& cache_path) {
  namespace fs = std::filesystem;
  std::error_code ec;
  auto src_time = fs::last_write_time(path, ec);
  if (ec) throw GraphIoError("cannot open graph file '" + path + "'");
  auto cache_time = fs::last_write_time(cache_path, ec);
  if (!ec && cache_time >= src_time) {
    std::ifstream in(cache_path, std::ios::binary);
    try {
      return LoadGraphCache(in);
    } catch (const GraphIoError&) {
      // Stale or foreign file; rebuild below.
    }
  }
  TemporalGraph g = LoadGraphFile(path);
  std::ofstream out(cache_path, std::ios::binary | std::ios::trunc);
  if (out) SaveGraphCache(g, out);
  return g;
}

}  // namespace comine
