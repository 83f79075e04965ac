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

#include <iosfwd>

#include "comine/verify.h"

namespace comine {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // verify mismatch, bad arguments
inline constexpr int kExitQueryError = 2;
inline constexpr int kExitGraphError = 3;
inline constexpr int kExitOutputError = 4;
inline constexpr int kExitGuardError = 5;

struct CliHooks {
  // Replaces the miner checked by `verify`.
  MinerFn miner;
};

// Entry point of the `comine` tool: mine, plan, verify, bench.
int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err, const CliHooks* hooks = nullptr);

}  // namespace comine
