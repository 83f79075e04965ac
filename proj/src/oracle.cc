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

#include "comine/oracle.h"

#include <map>
#include <string>

namespace comine {

namespace {

// Tuple enumerator. Prefixes are dropped as soon as they break the window or
// admit no consistent injective vertex assignment, which is just the
// definition checked early.
class TupleSearch {
 public:
  TupleSearch(const TemporalGraph& g, const Motif& m, Timestamp delta,
              bool count_only)
      : g_(g), m_(m), delta_(delta), count_only_(count_only) {}

  void Run() {
    if (m_.empty()) return;
    Extend(0);
  }

  std::uint64_t count = 0;
  std::vector<std::vector<EdgeId>> tuples;

 private:
  // Assigns motif vertex mv to graph vertex gv if possible; records whether
  // this call created the assignment.
  bool Assign(MotifVertex mv, VertexId gv, bool& created) {
    created = false;
    auto fwd = m2g_.find(mv);
    if (fwd != m2g_.end()) return fwd->second == gv;
    if (g2m_.count(gv) != 0) return false;
    m2g_[mv] = gv;
    g2m_[gv] = mv;
    created = true;
    return true;
  }

  void Release(MotifVertex mv) {
    g2m_.erase(m2g_.at(mv));
    m2g_.erase(mv);
  }

  void Extend(std::size_t k) {
    if (k == m_.size()) {
      ++count;
      if (!count_only_) tuples.push_back(tuple_);
      return;
    }
    const std::size_t n = g_.num_edges();
    const std::size_t first = tuple_.empty() ? 0 : tuple_.back() + 1;
    for (std::size_t id = first; id < n; ++id) {
      const TemporalEdge& e = g_.edge(static_cast<EdgeId>(id));
      // Ids follow time order, so once the window is exceeded it stays so.
      if (!tuple_.empty() && e.t - g_.edge(tuple_.front()).t > delta_) break;
      const MotifEdge& me = m_.edges[k];
      bool made_src = false;
      bool made_dst = false;
      if (!Assign(me.src, e.src, made_src)) continue;
      if (!Assign(me.dst, e.dst, made_dst)) {
        if (made_src) Release(me.src);
        continue;
      }
      tuple_.push_back(static_cast<EdgeId>(id));
      Extend(k + 1);
      tuple_.pop_back();
      if (made_dst) Release(me.dst);
      if (made_src) Release(me.src);
    }
  }

  const TemporalGraph& g_;
  const Motif& m_;
  const Timestamp delta_;
  const bool count_only_;
  std::vector<EdgeId> tuple_;
  std::map<MotifVertex, VertexId> m2g_;
  std::map<VertexId, MotifVertex> g2m_;
};

}  // namespace

void CheckOracleGuard(const TemporalGraph& g, const Motif& m) {
  if (g.num_edges() <= kOracleMaxEdges || m.size() <= kOracleMaxMotifEdges) {
    return;
  }
  throw OracleGuardError("oracle refuses a " + std::to_string(m.size()) +
                         "-edge motif on " + std::to_string(g.num_edges()) +
                         " edges (limit " + std::to_string(kOracleMaxEdges) +
                         " edges or " + std::to_string(kOracleMaxMotifEdges) +
                         " motif edges)");
}

std::vector<std::vector<EdgeId>> BruteForceEnumerate(const TemporalGraph& g,
                                                     const Motif& m,
                                                     Timestamp delta,
                                                     bool allow_large) {
  if (!allow_large) CheckOracleGuard(g, m);
  TupleSearch search(g, m, delta, /*count_only=*/false);
  search.Run();
  // Produced in lexicographic order already: the outer loops walk ids upward.
  return std::move(search.tuples);
}

std::uint64_t BruteForceCount(const TemporalGraph& g, const Motif& m,
                              Timestamp delta, bool allow_large) {
  if (!allow_large) CheckOracleGuard(g, m);
  TupleSearch search(g, m, delta, /*count_only=*/true);
  search.Run();
  return search.count;
}

}  // namespace comine
