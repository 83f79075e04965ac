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

#include "comine/cli.h"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "comine/bench.h"
#include "comine/graph.h"
#include "comine/mgtree.h"
#include "comine/miner.h"
#include "comine/oracle.h"
#include "comine/plan.h"
#include "comine/query.h"
#include "comine/runtime.h"
#include "comine/synthetic.h"

namespace comine {

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

// Carries an exit code out of a subcommand.
struct CliFailure {
  int code;
  std::string message;
};

struct Options {
  std::string query_path;
  std::string graph_path;
  std::string cache_path;
  std::string mode;
  unsigned threads = 0;
  std::string balance;
  bool force_comine = false;
  bool force_individual = false;
  std::string dot_path;
  std::size_t fuzz = 0;
  std::uint64_t seed = 1;
  std::vector<std::string> delta_mults;
  std::vector<unsigned> workers;
  int repeat = 1;
  std::string out_dir = ".";
  bool allow_large = false;
  bool no_shrink = false;
  std::string synthetic = "uniform";
  std::uint32_t vertices = 1000;
  std::size_t edges = 10000;
};

Query LoadQueryOrFail(const Options& o) {
  try {
    return LoadQueryFile(o.query_path);
  } catch (const QueryError& e) {
    throw CliFailure{kExitQueryError, o.query_path + ": " + e.what()};
  }
}

// --graph wins; otherwise the query's graph path, relative to the query file.
std::string ResolveGraphPath(const Options& o, const Query* q) {
  if (!o.graph_path.empty()) return o.graph_path;
  if (q == nullptr || q->graph_path.empty()) return "";
  fs::path p(q->graph_path);
  if (p.is_relative() && !o.query_path.empty()) {
    p = fs::path(o.query_path).parent_path() / p;
  }
  return p.string();
}

TemporalGraph LoadGraphOrFail(const Options& o, const std::string& path) {
  if (path.empty()) throw CliFailure{kExitGraphError, "no graph given"};
  try {
    if (!o.cache_path.empty()) return LoadGraphCached(path, o.cache_path);
    return LoadGraphFile(path);
  } catch (const ParseError& e) {
    throw CliFailure{kExitGraphError, path + ": " + e.what()};
  } catch (const GraphIoError& e) {
    throw CliFailure{kExitGraphError, e.what()};
  }
}

Timestamp DeltaOrFail(const Query& q, const TemporalGraph& g) {
  try {
    return q.DeltaTicks(g.scale());
  } catch (const QueryError& e) {
    throw CliFailure{kExitQueryError, e.what()};
  }
}

fs::path OutputDirOrFail(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw CliFailure{kExitOutputError, "cannot create output directory '" + dir + "'"};
  }
  return fs::path(dir);
}

std::ofstream OpenOrFail(const fs::path& path) {
  std::ofstream f(path);
  if (!f) throw CliFailure{kExitOutputError, "cannot write '" + path.string() + "'"};
  return f;
}

std::string SafeFileName(const std::string& name) {
  std::string out;
  for (char c : name) {
    bool ok = std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
              c == '-' || c == '.';
    out += ok ? c : '_';
  }
  return out;
}

void MergeRunStats(RunStats& into, const RunStats& from) {
  into.wall_ms += from.wall_ms;
  into.epochs += from.epochs;
  into.handoffs += from.handoffs;
  into.split_contexts += from.split_contexts;
  if (into.workers.size() < from.workers.size()) {
    into.workers.resize(from.workers.size());
  }
  for (std::size_t i = 0; i < from.workers.size(); ++i) {
    WorkerStats& w = into.workers[i];
    const WorkerStats& f = from.workers[i];
    w.visits += f.visits;
    w.expansions += f.expansions;
    w.matches += f.matches;
    w.busy_ms += f.busy_ms;
    w.contexts += f.contexts;
  }
}

int CmdMine(const Options& o, std::ostream& out) {
  Query q = LoadQueryOrFail(o);
  if (!o.mode.empty()) q.mode = *ParseMineMode(o.mode);
  if (o.threads > 0) q.threads = o.threads;
  if (!o.balance.empty()) q.balance = *ParseBalanceMode(o.balance);
  const std::string graph_path = ResolveGraphPath(o, &q);
  TemporalGraph g = LoadGraphOrFail(o, graph_path);
  const Timestamp delta = DeltaOrFail(q, g);

  MGTree tree = ConstructMGTree(q.motifs);
  CoMiningDecision decision = CoMiningHeuristic(g, q.motifs, tree, delta);
  bool co_mine = decision.co_mine;
  if (o.force_comine) co_mine = true;
  if (o.force_individual) co_mine = false;

  RuntimeConfig rc;
  rc.workers = q.threads;
  rc.balance = q.balance;
  rc.epoch = EpochConfig::FromEnvironment();

  MatchResult result;
  RunStats stats;
  if (co_mine) {
    ParallelResult pr = RunParallel(g, tree, delta, q.mode, rc);
    result = std::move(pr.result);
    stats = std::move(pr.stats);
  } else {
    result.Init(q.motifs, q.mode);
    for (std::size_t i = 0; i < q.motifs.size(); ++i) {
      ParallelResult pr =
          RunParallel(g, ConstructMGTree({q.motifs[i]}), delta, q.mode, rc);
      result.counts[i] = pr.result.counts[0];
      if (q.mode == MineMode::kEnumerate) {
        result.matches[i] = std::move(pr.result.matches[0]);
      }
      MergeRunStats(stats, pr.stats);
    }
    stats.sigma = g.num_edges() == 0
                      ? 0
                      : static_cast<double>(result.total_count()) /
                            static_cast<double>(g.num_edges());
  }

  fs::path dir = OutputDirOrFail(o.out_dir);
  std::vector<std::string> match_files(q.motifs.size());
  if (q.mode == MineMode::kEnumerate) {
    for (std::size_t i = 0; i < q.motifs.size(); ++i) {
      fs::path p = dir / ("matches_" + SafeFileName(q.motifs[i].name) + ".txt");
      std::ofstream f = OpenOrFail(p);
      for (const Match& m : result.matches[i]) {
        WriteMatchLine(f, q.motifs[i].name, m);
      }
      if (!f) throw CliFailure{kExitOutputError, "write failed: " + p.string()};
      match_files[i] = p.string();
    }
  }

  std::ostringstream tsv;
  for (std::size_t i = 0; i < q.motifs.size(); ++i) {
    tsv << q.motifs[i].name << '\t' << result.counts[i] << '\n';
  }
  {
    std::ofstream f = OpenOrFail(dir / "counts.tsv");
    f << tsv.str();
    if (!f) throw CliFailure{kExitOutputError, "write failed: counts.tsv"};
  }

  Json j;
  j["graph"] = graph_path;
  j["delta"] = q.delta;
  j["delta_ticks"] = delta;
  j["mode"] = std::string(ToString(q.mode));
  j["strategy"] = co_mine ? "co_mine" : "individual";
  j["forced"] = o.force_comine || o.force_individual;
  j["heuristic"] = ToJson(decision);
  auto motifs = Json::array();
  for (std::size_t i = 0; i < q.motifs.size(); ++i) {
    Json m;
    m["name"] = q.motifs[i].name;
    m["edges"] = q.motifs[i].EdgeString();
    m["count"] = result.counts[i];
    if (!match_files[i].empty()) {
      m["matches_file"] = match_files[i];
    } else {
      m["matches_file"] = nullptr;
    }
    motifs.push_back(std::move(m));
  }
  j["motifs"] = std::move(motifs);
  j["stats"] = ToJson(stats);
  {
    std::ofstream f = OpenOrFail(dir / "result.json");
    f << j.dump(2) << '\n';
    if (!f) throw CliFailure{kExitOutputError, "write failed: result.json"};
  }
  out << tsv.str();
  return kExitOk;
}

int CmdPlan(const Options& o, std::ostream& out) {
  Query q = LoadQueryOrFail(o);
  MGTree tree = ConstructMGTree(q.motifs);
  TraversalPlan plan = SpecializePlan(tree);
  const double sm = SimilarityMetric(q.motifs, tree);
  out << "tree:\n" << DumpOutline(tree);
  out << "plan:\n" << DescribePlan(plan);
  out << "similarity: " << std::setprecision(6) << sm << '\n';
  const std::string graph_path = ResolveGraphPath(o, &q);
  if (!graph_path.empty()) {
    TemporalGraph g = LoadGraphOrFail(o, graph_path);
    CoMiningDecision d =
        CoMiningHeuristic(g, q.motifs, tree, DeltaOrFail(q, g));
    out << "decision: " << ToJson(d).dump() << '\n';
  } else {
    out << "decision: " << (DecideCoMining(false, sm) ? "co_mine" : "mine_individually")
        << " (no graph; bipartite clause not evaluated)\n";
  }
  if (!o.dot_path.empty()) {
    if (o.dot_path == "-") {
      out << DumpDot(tree);
    } else {
      std::ofstream f = OpenOrFail(o.dot_path);
      f << DumpDot(tree);
      if (!f) throw CliFailure{kExitOutputError, "write failed: " + o.dot_path};
    }
  }
  return kExitOk;
}

int CmdVerify(const Options& o, std::ostream& out, const CliHooks* hooks) {
  MinerFn miner = hooks != nullptr && hooks->miner ? hooks->miner : DefaultMiner();
  try {
    if (o.fuzz > 0) {
      FuzzOptions fo;
      fo.instances = o.fuzz;
      fo.seed = o.seed;
      fo.shrink = !o.no_shrink;
      FuzzReport report = Fuzz(fo, miner);
      if (report.first) {
        PrintMismatch(out, *report.first);
        return kExitFailure;
      }
      out << "ok: " << report.instances << " instances agree with the oracle\n";
      return kExitOk;
    }
    if (o.query_path.empty()) {
      throw CliFailure{kExitFailure, "verify needs --query or --fuzz"};
    }
    Query q = LoadQueryOrFail(o);
    TemporalGraph g = LoadGraphOrFail(o, ResolveGraphPath(o, &q));
    const Timestamp delta = DeltaOrFail(q, g);
    if (!o.allow_large) {
      for (const Motif& m : q.motifs) CheckOracleGuard(g, m);
    }
    std::vector<RawEdge> edges;
    edges.reserve(g.num_edges());
    for (const TemporalEdge& e : g.edges()) edges.push_back({e.src, e.dst, e.t});
    auto mismatch = VerifyInstance(edges, q.motifs, delta, miner, !o.no_shrink,
                                   o.allow_large);
    if (mismatch) {
      PrintMismatch(out, *mismatch);
      return kExitFailure;
    }
    out << "ok: " << q.motifs.size() << " motifs agree with the oracle\n";
    return kExitOk;
  } catch (const OracleGuardError& e) {
    throw CliFailure{kExitGuardError,
                     std::string(e.what()) + " (use --allow-large to override)"};
  }
}

int CmdBench(const Options& o, std::ostream& out) {
  Query q = LoadQueryOrFail(o);
  const std::string graph_path = ResolveGraphPath(o, &q);
  TemporalGraph g;
  if (!graph_path.empty()) {
    g = LoadGraphOrFail(o, graph_path);
  } else {
    auto mode = ParseSyntheticMode(o.synthetic);
    if (!mode) throw CliFailure{kExitFailure, "unknown synthetic mode"};
    g = BuildIndexedGraph(
        GenerateSynthetic(*mode, o.vertices, o.edges, o.seed), o.vertices);
  }
  const Timestamp delta = DeltaOrFail(q, g);

  BenchConfig bc;
  if (!o.delta_mults.empty()) {
    bc.multipliers.clear();
    for (const std::string& t : o.delta_mults) {
      auto m = ParseDeltaMultiplier(t);
      if (!m) throw CliFailure{kExitFailure, "bad delta multiplier '" + t + "'"};
      bc.multipliers.push_back(*m);
    }
  }
  if (!o.workers.empty()) bc.workers = o.workers;
  if (!o.balance.empty()) bc.balance = *ParseBalanceMode(o.balance);
  bc.repeats = o.repeat;

  std::vector<BenchRow> rows = RunBench(g, q.motifs, delta, bc);
  fs::path dir = OutputDirOrFail(o.out_dir);
  std::ofstream f = OpenOrFail(dir / "bench.csv");
  WriteBenchCsv(f, rows);
  if (!f) throw CliFailure{kExitOutputError, "write failed: bench.csv"};
  WriteBenchCsv(out, rows);
  return kExitOk;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err, const CliHooks* hooks) {
  CLI::App app{"Exact temporal motif co-mining", "comine"};
  app.require_subcommand(1);
  Options o;

  auto mode_check = CLI::IsMember({"count", "enumerate"});
  auto balance_check = CLI::IsMember({"none", "dynamic", "context_split"});

  auto* mine = app.add_subcommand("mine", "Count or enumerate motif matches");
  mine->add_option("--query", o.query_path, "Query file")->required();
  mine->add_option("--graph", o.graph_path, "Edge list (overrides the query)");
  mine->add_option("--cache", o.cache_path, "Binary graph cache file");
  mine->add_option("--mode", o.mode, "count or enumerate")->check(mode_check);
  mine->add_option("--threads", o.threads, "Worker threads")
      ->check(CLI::PositiveNumber);
  mine->add_option("--balance", o.balance, "none, dynamic or context_split")
      ->check(balance_check);
  auto* fc = mine->add_flag("--force-comine", o.force_comine,
                            "Co-mine regardless of the heuristic");
  auto* fi = mine->add_flag("--force-individual", o.force_individual,
                            "Mine each motif on its own");
  fc->excludes(fi);
  mine->add_option("--out", o.out_dir, "Output directory");

  auto* plan = app.add_subcommand("plan", "Show the motif tree and plan");
  plan->add_option("--query", o.query_path, "Query file")->required();
  plan->add_option("--graph", o.graph_path, "Edge list for the heuristic");
  plan->add_option("--cache", o.cache_path, "Binary graph cache file");
  plan->add_option("--dot", o.dot_path, "Write a DOT digraph ('-' = stdout)");

  auto* verify = app.add_subcommand("verify", "Check the miner against the oracle");
  verify->add_option("--query", o.query_path, "Query file");
  verify->add_option("--graph", o.graph_path, "Edge list (overrides the query)");
  verify->add_option("--fuzz", o.fuzz, "Number of random instances");
  verify->add_option("--seed", o.seed, "Random seed");
  verify->add_flag("--allow-large", o.allow_large, "Lift the oracle size guard");
  verify->add_flag("--no-shrink", o.no_shrink, "Report the full input");

  auto* bench = app.add_subcommand("bench", "Time co-mining against individual runs");
  bench->add_option("--query", o.query_path, "Query file")->required();
  bench->add_option("--graph", o.graph_path, "Edge list (default: synthetic)");
  bench->add_option("--cache", o.cache_path, "Binary graph cache file");
  bench->add_option("--delta-mult", o.delta_mults, "Delta multipliers, e.g. 1/4,1,4")
      ->delimiter(',');
  bench->add_option("--workers", o.workers, "Worker counts, e.g. 1,2,4")
      ->delimiter(',');
  bench->add_option("--balance", o.balance, "none, dynamic or context_split")
      ->check(balance_check);
  bench->add_option("--repeat", o.repeat, "Timed repetitions")
      ->check(CLI::PositiveNumber);
  bench->add_option("--synthetic", o.synthetic, "uniform, hub, bipartite or burst");
  bench->add_option("--vertices", o.vertices, "Synthetic vertex count");
  bench->add_option("--edges", o.edges, "Synthetic edge count");
  bench->add_option("--seed", o.seed, "Synthetic seed");
  bench->add_option("--out", o.out_dir, "Output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (mine->parsed()) return CmdMine(o, out);
    if (plan->parsed()) return CmdPlan(o, out);
    if (verify->parsed()) return CmdVerify(o, out, hooks);
    if (bench->parsed()) return CmdBench(o, out);
  } catch (const CliFailure& f) {
    err << "comine: " << f.message << '\n';
    return f.code;
  } catch (const std::invalid_argument& e) {
    err << "comine: " << e.what() << '\n';
    return kExitQueryError;
  } catch (const std::exception& e) {
    err << "comine: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitFailure;
}

}  // namespace comine
