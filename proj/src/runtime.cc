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

#include "comine/runtime.h"

#include <time.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <deque>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>

#include "comine/plan.h"

namespace comine {

namespace {

double ThreadCpuMs() {
  timespec ts{};
  clock_gettime(CLOCK_THREAD_CPUTIME_ID, &ts);
  return static_cast<double>(ts.tv_sec) * 1e3 +
         static_cast<double>(ts.tv_nsec) / 1e6;
}

// Shared state of one run: the root-edge cursor and, for context splitting,
// the pool of offloaded contexts.
class Scheduler {
 public:
  Scheduler(const Explorer& explorer, std::uint32_t num_edges,
            std::uint32_t chunk, std::size_t workers)
      : explorer_(explorer),
        num_edges_(num_edges),
        chunk_(chunk),
        workers_(workers) {}

  std::optional<SearchContext> NextChunk() {
    std::uint64_t lo = cursor_.fetch_add(chunk_, std::memory_order_relaxed);
    if (lo >= num_edges_) return std::nullopt;
    std::uint64_t hi = std::min<std::uint64_t>(num_edges_, lo + chunk_);
    return explorer_.RootContext(static_cast<EdgeId>(lo),
                                 static_cast<EdgeId>(hi));
  }

  // Root chunk, else pooled context, else waits. nullopt once every worker
  // is idle with nothing left to hand out.
  std::optional<SearchContext> Acquire() {
    if (auto c = NextChunk()) return c;
    std::unique_lock lock(mu_);
    while (true) {
      if (!pool_.empty()) {
        SearchContext ctx = std::move(pool_.front());
        pool_.pop_front();
        pool_size_.store(pool_.size(), std::memory_order_relaxed);
        return ctx;
      }
      if (finished_) return std::nullopt;
      ++idle_;
      idle_hint_.store(idle_, std::memory_order_relaxed);
      if (idle_ == workers_) {
        finished_ = true;
        cv_.notify_all();
        return std::nullopt;
      }
      cv_.wait(lock, [&] { return !pool_.empty() || finished_; });
      --idle_;
      idle_hint_.store(idle_, std::memory_order_relaxed);
    }
  }

  void Offer(std::vector<SearchContext> contexts) {
    if (contexts.empty()) return;
    {
      std::lock_guard lock(mu_);
      for (auto& c : contexts) pool_.push_back(std::move(c));
      pool_size_.store(pool_.size(), std::memory_order_relaxed);
    }
    cv_.notify_all();
  }

  // Idle workers not already covered by pooled work.
  std::size_t Starving() const {
    std::size_t idle = idle_hint_.load(std::memory_order_relaxed);
    std::size_t pooled = pool_size_.load(std::memory_order_relaxed);
    return idle > pooled ? idle - pooled : 0;
  }

  std::size_t workers() const { return workers_; }

 private:
  const Explorer& explorer_;
  const std::uint32_t num_edges_;
  const std::uint32_t chunk_;
  const std::size_t workers_;
  std::atomic<std::uint64_t> cursor_{0};

  std::mutex mu_;
  std::condition_variable cv_;
  std::deque<SearchContext> pool_;
  std::size_t idle_ = 0;
  bool finished_ = false;
  std::atomic<std::size_t> idle_hint_{0};
  std::atomic<std::size_t> pool_size_{0};
};

struct WorkerOutput {
  MatchResult result;
  WorkerStats stats;
  std::uint64_t epochs = 0;
  std::uint64_t handoffs = 0;
  std::uint64_t split_contexts = 0;
};

void RunContextSplitWorker(const Explorer& explorer, Scheduler& sched,
                           const EpochConfig& epoch, WorkerOutput& out) {
  const std::uint64_t intra = std::max<std::uint64_t>(epoch.intra_interval, 1);
  const std::uint64_t inter = std::max<std::uint64_t>(epoch.inter_interval, 1);
  std::uint64_t since_epoch = 0;
  while (auto ctx = sched.Acquire()) {
    ++out.stats.contexts;
    while (!explorer.Run(*ctx, intra, out.result)) {
      since_epoch += intra;
      std::size_t starving = sched.Starving();
      if (starving == 0) continue;
      if (auto sibling = explorer.SiblingHandoff(*ctx)) {
        ++out.handoffs;
        std::vector<SearchContext> one;
        one.push_back(std::move(*sibling));
        sched.Offer(std::move(one));
        continue;
      }
      if (since_epoch < inter) continue;
      since_epoch = 0;
      const std::size_t workers = sched.workers();
      if (static_cast<double>(starving) <
          epoch.idle_fraction * static_cast<double>(workers)) {
        continue;
      }
      std::vector<SearchContext> active;
      active.push_back(std::move(*ctx));
      auto assignment = RebalanceEpoch(explorer, std::move(active), workers,
                                       starving, epoch);
      ++out.epochs;
      std::vector<SearchContext> pieces;
      for (auto& slot : *assignment) {
        for (auto& c : slot) pieces.push_back(std::move(c));
      }
      out.split_contexts += pieces.size();
      if (pieces.empty()) {
        ctx->levels.clear();
        break;
      }
      *ctx = std::move(pieces.front());
      pieces.erase(pieces.begin());
      sched.Offer(std::move(pieces));
    }
  }
}

}  // namespace

std::uint64_t RunStats::visits() const {
  std::uint64_t v = 0;
  for (const WorkerStats& w : workers) v += w.visits;
  return v;
}

std::uint64_t RunStats::expansions() const {
  std::uint64_t v = 0;
  for (const WorkerStats& w : workers) v += w.expansions;
  return v;
}

namespace {

template <typename F>
double Imbalance(const std::vector<WorkerStats>& workers, F value) {
  if (workers.size() < 2) return 1;
  double max = 0;
  double sum = 0;
  for (const WorkerStats& w : workers) {
    double v = value(w);
    max = std::max(max, v);
    sum += v;
  }
  if (sum <= 0) return 1;
  return max / (sum / static_cast<double>(workers.size()));
}

}  // namespace

double RunStats::VisitImbalance() const {
  return Imbalance(workers, [](const WorkerStats& w) {
    return static_cast<double>(w.visits);
  });
}

double RunStats::BusyImbalance() const {
  return Imbalance(workers, [](const WorkerStats& w) { return w.busy_ms; });
}

nlohmann::ordered_json ToJson(const RunStats& stats) {
  nlohmann::ordered_json j;
  j["wall_ms"] = stats.wall_ms;
  j["visits"] = stats.visits();
  j["expansions"] = stats.expansions();
  j["epochs"] = stats.epochs;
  j["handoffs"] = stats.handoffs;
  j["split_contexts"] = stats.split_contexts;
  j["sigma"] = stats.sigma;
  j["visit_imbalance"] = stats.VisitImbalance();
  auto workers = nlohmann::ordered_json::array();
  for (const WorkerStats& w : stats.workers) {
    nlohmann::ordered_json wj;
    wj["visits"] = w.visits;
    wj["expansions"] = w.expansions;
    wj["matches"] = w.matches;
    wj["busy_ms"] = w.busy_ms;
    wj["contexts"] = w.contexts;
    workers.push_back(std::move(wj));
  }
  j["workers"] = std::move(workers);
  return j;
}

ParallelResult RunParallel(const TemporalGraph& g, const MGTree& tree,
                           Timestamp delta, MineMode mode,
                           const RuntimeConfig& config) {
  return RunPlanParallel(g, SpecializePlan(tree), delta, mode, config);
}

ParallelResult RunPlanParallel(const TemporalGraph& g, const TraversalPlan& plan,
                               Timestamp delta, MineMode mode,
                               const RuntimeConfig& config) {
  if (config.workers == 0) throw std::invalid_argument("workers must be >= 1");
  const auto start = std::chrono::steady_clock::now();
  const std::size_t workers = config.workers;
  const auto n = static_cast<std::uint32_t>(g.num_edges());
  Explorer explorer(g, plan, delta, mode);

  std::uint32_t chunk = config.chunk_size;
  if (chunk == 0) {
    chunk = std::max<std::uint32_t>(
        1, n / static_cast<std::uint32_t>(workers * 64));
  }
  Scheduler sched(explorer, n, chunk, workers);

  std::vector<WorkerOutput> outputs(workers);
  for (WorkerOutput& o : outputs) o.result = explorer.NewResult();

  auto work = [&](std::size_t w) {
    WorkerOutput& out = outputs[w];
    const double cpu0 = ThreadCpuMs();
    switch (config.balance) {
      case BalanceMode::kNone: {
        auto lo = static_cast<EdgeId>(std::uint64_t{n} * w / workers);
        auto hi = static_cast<EdgeId>(std::uint64_t{n} * (w + 1) / workers);
        SearchContext ctx = explorer.RootContext(lo, hi);
        explorer.Run(ctx, Explorer::kNoBudget, out.result);
        out.stats.contexts = 1;
        break;
      }
      case BalanceMode::kDynamic:
        while (auto ctx = sched.NextChunk()) {
          ++out.stats.contexts;
          explorer.Run(*ctx, Explorer::kNoBudget, out.result);
        }
        break;
      case BalanceMode::kContextSplit:
        RunContextSplitWorker(explorer, sched, config.epoch, out);
        break;
    }
    out.stats.busy_ms = ThreadCpuMs() - cpu0;
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(work, w);
    for (std::thread& t : threads) t.join();
  }

  ParallelResult pr;
  pr.result = explorer.NewResult();
  for (WorkerOutput& o : outputs) {
    o.stats.visits = o.result.stats.visits;
    o.stats.expansions = o.result.stats.expansions;
    o.stats.matches = o.result.total_count();
    pr.stats.epochs += o.epochs;
    pr.stats.handoffs += o.handoffs;
    pr.stats.split_contexts += o.split_contexts;
    pr.stats.workers.push_back(o.stats);
    pr.result.Merge(std::move(o.result));
  }
  if (mode == MineMode::kEnumerate) pr.result.SortMatches();
  pr.stats.sigma = n == 0 ? 0
                          : static_cast<double>(pr.result.total_count()) /
                                static_cast<double>(n);
  pr.stats.wall_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
  return pr;
}

}  // namespace comine
