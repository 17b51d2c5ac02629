// Copyright 2026 The tom Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "tom/matcher.hpp"

namespace tom {

enum class Engine { kBrute, kHuet, kBoth };
enum class Mode { kDecide, kEnumerate, kProofkit };

struct RunConfig {
  Engine engine = Engine::kBrute;
  Mode mode = Mode::kDecide;
  // Number of solutions to print in enumerate mode; at least 1.
  int enumerate_k = 1;
  // Search nodes the enumerate mode may expand before giving up.
  std::uint64_t node_limit = 100000;
  std::optional<int> max_depth;
  bool stats = false;
  bool json = false;
  int threads = 1;
};

// Exit codes.
inline constexpr int kExitSolved = 0;
inline constexpr int kExitUnsolvable = 1;
inline constexpr int kExitError = 2;

struct RunOutput {
  int exit_code = kExitError;
  std::string out;
  std::string err;
};

// Validates p and runs the configured mode. Never throws: library errors
// become exit code 2 with a diagnostic on err.
RunOutput run(const RunConfig& config, const MatchingProblem& p);
// parse_problem followed by run.
RunOutput run_text(const RunConfig& config, std::string_view text);

}  // namespace tom
