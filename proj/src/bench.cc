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

#include "comine/bench.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <ostream>
#include <stdexcept>

#include "comine/mgtree.h"
#include "comine/runtime.h"

namespace comine {

namespace {

std::optional<double> ParsePositive(std::string_view text) {
  if (text.empty()) return std::nullopt;
  std::string s(text);
  char* end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || !(v > 0) || !std::isfinite(v)) {
    return std::nullopt;
  }
  return v;
}

struct Timing {
  double min_ms = 0;
  double median_ms = 0;
  std::uint64_t visits = 0;
  std::vector<std::uint64_t> counts;
};

double Median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  std::size_t n = v.size();
  if (n == 0) return 0;
  return n % 2 == 1 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2;
}

template <typename F>
Timing Measure(int repeats, F run) {
  Timing t;
  std::vector<double> walls;
  for (int r = 0; r < std::max(repeats, 1); ++r) {
    ParallelResult pr = run();
    walls.push_back(pr.stats.wall_ms);
    t.visits = pr.stats.visits();
    t.counts = pr.result.counts;
  }
  t.min_ms = *std::min_element(walls.begin(), walls.end());
  t.median_ms = Median(walls);
  return t;
}

}  // namespace

std::optional<DeltaMultiplier> ParseDeltaMultiplier(std::string_view text) {
  auto slash = text.find('/');
  std::optional<double> value;
  if (slash == std::string_view::npos) {
    value = ParsePositive(text);
  } else {
    auto num = ParsePositive(text.substr(0, slash));
    auto den = ParsePositive(text.substr(slash + 1));
    if (num && den) value = *num / *den;
  }
  if (!value) return std::nullopt;
  return DeltaMultiplier{std::string(text), *value};
}

std::vector<DeltaMultiplier> DefaultDeltaMultipliers() {
  std::vector<DeltaMultiplier> out;
  for (const char* t : {"1/4", "1/3", "1/2", "1", "2", "3", "4"}) {
    out.push_back(*ParseDeltaMultiplier(t));
  }
  return out;
}

std::vector<BenchRow> RunBench(const TemporalGraph& g,
                               const std::vector<Motif>& motifs,
                               Timestamp base_delta, const BenchConfig& config) {
  if (motifs.empty()) throw std::invalid_argument("bench needs motifs");
  MGTree tree = ConstructMGTree(motifs);
  std::vector<MGTree> singles;
  for (const Motif& m : motifs) singles.push_back(ConstructMGTree({m}));

  std::vector<BenchRow> rows;
  for (const DeltaMultiplier& mult : config.multipliers) {
    const auto delta = std::max<Timestamp>(
        1, static_cast<Timestamp>(
               std::floor(static_cast<double>(base_delta) * mult.value)));
    for (unsigned w : config.workers) {
      RuntimeConfig rc;
      rc.workers = w;
      rc.balance = config.balance;
      rc.epoch = EpochConfig::FromEnvironment();

      Timing co = Measure(config.repeats, [&] {
        return RunParallel(g, tree, delta, MineMode::kCount, rc);
      });
      Timing ind = Measure(config.repeats, [&] {
        ParallelResult total;
        total.result.counts.assign(motifs.size(), 0);
        total.stats.workers.resize(1);
        for (std::size_t i = 0; i < singles.size(); ++i) {
          ParallelResult one =
              RunParallel(g, singles[i], delta, MineMode::kCount, rc);
          total.result.counts[i] = one.result.counts[0];
          total.stats.wall_ms += one.stats.wall_ms;
          total.stats.workers[0].visits += one.stats.visits();
        }
        return total;
      });

      BenchRow co_row;
      co_row.delta_mult = mult.text;
      co_row.delta = delta;
      co_row.workers = w;
      co_row.mode = "co_mine";
      co_row.wall_ms = co.median_ms;
      co_row.wall_ms_min = co.min_ms;
      co_row.wall_ms_median = co.median_ms;
      co_row.visits = co.visits;
      co_row.speedup = co.median_ms > 0 ? ind.median_ms / co.median_ms : 1;
      co_row.counts = co.counts;

      BenchRow ind_row = co_row;
      ind_row.mode = "individual";
      ind_row.wall_ms = ind.median_ms;
      ind_row.wall_ms_min = ind.min_ms;
      ind_row.wall_ms_median = ind.median_ms;
      ind_row.visits = ind.visits;
      ind_row.speedup = 1;
      ind_row.counts = ind.counts;

      rows.push_back(std::move(co_row));
      rows.push_back(std::move(ind_row));
    }
  }
  return rows;
}

void WriteBenchCsv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << "delta_mult,workers,mode,wall_ms,visits,speedup,delta,wall_ms_min,"
         "wall_ms_median,counts\n";
  for (const BenchRow& r : rows) {
    out << r.delta_mult << ',' << r.workers << ',' << r.mode << ',' << r.wall_ms
        << ',' << r.visits << ',' << r.speedup << ',' << r.delta << ','
        << r.wall_ms_min << ',' << r.wall_ms_median << ',';
    for (std::size_t i = 0; i < r.counts.size(); ++i) {
      if (i > 0) out << ';';
      out << r.counts[i];
    }
    out << '\n';
  }
}

}  // namespace comine
