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
#include <stdexcept>
#include <vector>

#include "comine/graph.h"
#include "comine/motif.h"

// Reference matcher for differential testing. It enumerates increasing edge
// tuples straight from the match definition and shares no search code with
// the miner.

namespace comine {

class OracleGuardError : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline constexpr std::size_t kOracleMaxEdges = 500;
inline constexpr std::size_t kOracleMaxMotifEdges = 3;

// Throws OracleGuardError unless |E| <= 500 or |E(m)| <= 3.
void CheckOracleGuard(const TemporalGraph& g, const Motif& m);

// All matches of m, each a strictly increasing edge-id tuple, sorted
// lexicographically.
std::vector<std::vector<EdgeId>> BruteForceEnumerate(const TemporalGraph& g,
                                                     const Motif& m,
                                                     Timestamp delta,
                                                     bool allow_large = false);

std::uint64_t BruteForceCount(const TemporalGraph& g, const Motif& m,
                              Timestamp delta, bool allow_large = false);

}  // namespace comine
