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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "comine/graph.h"
#include "comine/motif.h"
#include "comine/query.h"

namespace comine {

// A δ multiplier kept both as text ("1/3") and as a value.
struct DeltaMultiplier {
  std::string text;
  double value = 1;
};

// "0.25", "1/4", "3".
std::optional<DeltaMultiplier> ParseDeltaMultiplier(std::string_view text);
std::vector<DeltaMultiplier> DefaultDeltaMultipliers();

struct BenchConfig {
  std::vector<DeltaMultiplier> multipliers = DefaultDeltaMultipliers();
  std::vector<unsigned> workers = {1};
  BalanceMode balance = BalanceMode::kDynamic;
  int repeats = 1;
};

struct BenchRow {
  std::string delta_mult;
  Timestamp delta = 0;
  unsigned workers = 1;
  std::string mode;  // "co_mine" or "individual"
  double wall_ms = 0;  // median
  double wall_ms_min = 0;
  double wall_ms_median = 0;
  std::uint64_t visits = 0;
  // individual / co_mine median wall time; 1 on individual rows.
  double speedup = 1;
  std::vector<std::uint64_t> counts;
};

// For every multiplier and worker count, times co-mining the group against
// mining each motif on its own. δ is floored to whole ticks, minimum 1.
std::vector<BenchRow> RunBench(const TemporalGraph& g,
                               const std::vector<Motif>& motifs,
                               Timestamp base_delta, const BenchConfig& config);

void WriteBenchCsv(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace comine
