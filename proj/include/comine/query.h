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
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "comine/graph.h"
#include "comine/motif.h"

namespace comine {

enum class MineMode { kCount, kEnumerate };
enum class BalanceMode { kNone, kDynamic, kContextSplit };

std::string_view ToString(MineMode mode);
std::string_view ToString(BalanceMode mode);
std::optional<MineMode> ParseMineMode(std::string_view text);
std::optional<BalanceMode> ParseBalanceMode(std::string_view text);

class QueryError : public std::runtime_error {
 public:
  QueryError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what
                                     : "line " + std::to_string(line) + ": " +
                                           what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A multi-motif mining request.
//
//   graph <path>
//   delta <positive number>
//   mode count|enumerate
//   threads <n>
//   balance none|dynamic|context_split
//   motif <name>
//     edge <u> <v>
//   end
//
// Motif vertex tokens are arbitrary labels; motifs are stored canonicalized.
struct Query {
  std::string graph_path;
  std::vector<Motif> motifs;
  // Kept as text so it can be scaled exactly once the graph's #scale is known.
  std::string delta_text;
  double delta = 0;
  MineMode mode = MineMode::kCount;
  unsigned threads = 1;
  BalanceMode balance = BalanceMode::kDynamic;

  // δ in graph ticks (value * 10^scale, floored).
  Timestamp DeltaTicks(int scale) const;
};

Query ParseQuery(std::istream& in);
Query LoadQueryFile(const std::string& path);

}  // namespace comine
