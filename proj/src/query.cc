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

#include "comine/query.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>
#include <thread>
#include <unordered_map>

namespace comine {

namespace {

std::vector<std::string> Tokenize(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) {
    line = line.substr(0, hash);
  }
  std::vector<std::string> tokens;
  std::istringstream ss{std::string(line)};
  std::string tok;
  while (ss >> tok) tokens.push_back(tok);
  return tokens;
}

struct PendingMotif {
  std::string name;
  std::size_t line = 0;
  std::vector<MotifEdge> edges;
  std::unordered_map<std::string, MotifVertex> labels;
};

}  // namespace

std::string_view ToString(MineMode mode) {
  return mode == MineMode::kCount ? "count" : "enumerate";
}

std::string_view ToString(BalanceMode mode) {
  switch (mode) {
    case BalanceMode::kNone:
      return "none";
    case BalanceMode::kDynamic:
      return "dynamic";
    case BalanceMode::kContextSplit:
      return "context_split";
  }
  return "dynamic";
}

std::optional<MineMode> ParseMineMode(std::string_view text) {
  if (text == "count") return MineMode::kCount;
  if (text == "enumerate") return MineMode::kEnumerate;
  return std::nullopt;
}

std::optional<BalanceMode> ParseBalanceMode(std::string_view text) {
  if (text == "none") return BalanceMode::kNone;
  if (text == "dynamic") return BalanceMode::kDynamic;
  if (text == "context_split") return BalanceMode::kContextSplit;
  return std::nullopt;
}

Timestamp Query::DeltaTicks(int scale) const {
  auto ticks = ParseScaledNumber(delta_text, scale, /*truncate=*/true);
  if (!ticks) throw QueryError(0, "delta '" + delta_text + "' out of range");
  return *ticks;
}

Query ParseQuery(std::istream& in) {
  Query q;
  q.threads = std::max(1u, std::thread::hardware_concurrency());
  std::optional<PendingMotif> open;
  std::vector<std::size_t> motif_lines;
  bool have_delta = false;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tok = Tokenize(line);
    if (tok.empty()) continue;
    const std::string& key = tok[0];
    auto expect_args = [&](std::size_t n) {
      if (tok.size() != n + 1) {
        throw QueryError(line_no, "'" + key + "' expects " +
                                      std::to_string(n) + " argument(s)");
      }
    };

    if (open) {
      if (key == "edge") {
        expect_args(2);
        auto vertex = [&](const std::string& label) {
          auto [it, inserted] = open->labels.try_emplace(
              label, static_cast<MotifVertex>(open->labels.size()));
          return it->second;
        };
        MotifVertex u = vertex(tok[1]);
        MotifVertex v = vertex(tok[2]);
        if (u == v) {
          throw QueryError(line_no, "motif '" + open->name +
                                        "' has a self-loop edge on '" +
                                        tok[1] + "'");
        }
        open->edges.push_back({u, v});
      } else if (key == "end") {
        expect_args(0);
        if (open->edges.empty()) {
          throw QueryError(open->line, "motif '" + open->name + "' has no edges");
        }
        q.motifs.push_back(Canonicalize(
            Motif::FromEdges(std::move(open->name), std::move(open->edges))));
        motif_lines.push_back(open->line);
        open.reset();
      } else {
        throw QueryError(line_no, "unexpected '" + key + "' inside motif '" +
                                      open->name + "' (missing 'end'?)");
      }
      continue;
    }

    if (key == "graph") {
      expect_args(1);
      q.graph_path = tok[1];
    } else if (key == "delta") {
      expect_args(1);
      auto probe = ParseScaledNumber(tok[1], 0, /*truncate=*/true);
      double value = 0;
      auto [ptr, ec] = std::from_chars(tok[1].data(),
                                       tok[1].data() + tok[1].size(), value);
      if (!probe || ec != std::errc() ||
          ptr != tok[1].data() + tok[1].size()) {
        throw QueryError(line_no, "invalid delta '" + tok[1] + "'");
      }
      if (!(value > 0)) {
        throw QueryError(line_no, "delta must be positive, got " + tok[1]);
      }
      q.delta_text = tok[1];
      q.delta = value;
      have_delta = true;
    } else if (key == "mode") {
      expect_args(1);
      auto mode = ParseMineMode(tok[1]);
      if (!mode) throw QueryError(line_no, "unknown mode '" + tok[1] + "'");
      q.mode = *mode;
    } else if (key == "threads") {
      expect_args(1);
      unsigned n = 0;
      auto [ptr, ec] =
          std::from_chars(tok[1].data(), tok[1].data() + tok[1].size(), n);
      if (ec != std::errc() || ptr != tok[1].data() + tok[1].size() || n == 0) {
        throw QueryError(line_no, "threads must be a positive integer");
      }
      q.threads = n;
    } else if (key == "balance") {
      expect_args(1);
      auto balance = ParseBalanceMode(tok[1]);
      if (!balance) {
        throw QueryError(line_no, "unknown balance mode '" + tok[1] + "'");
      }
      q.balance = *balance;
    } else if (key == "motif") {
      expect_args(1);
      open.emplace();
      open->name = tok[1];
      open->line = line_no;
    } else {
      throw QueryError(line_no, "unknown directive '" + key + "'");
    }
  }
  if (open) {
    throw QueryError(open->line, "motif '" + open->name + "' is missing 'end'");
  }
  if (!have_delta) throw QueryError(0, "missing 'delta'");
  if (q.motifs.empty()) throw QueryError(0, "query has no motifs");

  for (std::size_t i = 0; i < q.motifs.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (q.motifs[i].name == q.motifs[j].name) {
        throw QueryError(motif_lines[i],
                         "duplicate motif name '" + q.motifs[i].name + "'");
      }
      if (q.motifs[i].SameEdges(q.motifs[j])) {
        throw QueryError(motif_lines[i], "motif '" + q.motifs[i].name +
                                             "' duplicates motif '" +
                                             q.motifs[j].name + "'");
      }
    }
  }
  return q;
}

Query LoadQueryFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw QueryError(0, "cannot open query file '" + path + "'");
  return ParseQuery(in);
}

}  // namespace comine
