// Copyright 2026 The curvident Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace curvident::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kMismatch = 1;   // observation contradicts the prediction
inline constexpr int kInvalid = 2;    // bad arguments, exceptional case, cap
inline constexpr int kUnstable = 3;   // rank did not stabilize

struct RunConfig {
  std::string command;
  std::optional<std::size_t> pbar;
  std::optional<std::size_t> k;
  std::optional<std::size_t> dim;
  std::optional<std::string> signature;  // "P,M"
  std::optional<std::size_t> trials;
  std::uint64_t seed = 0;
  std::optional<std::size_t> m_max;
  std::optional<std::size_t> n_max;
  std::optional<std::string> out;
  std::string format;  // json | csv
};

nlohmann::json to_json(const RunConfig& config);

inline constexpr std::size_t kMaxTableDim = 12;
inline constexpr std::size_t kMaxTableSlots = 8;
inline constexpr std::size_t kMaxNormalOrder = 4;

// Parses `args` (without the program name), runs the command and writes
// the report to `out` or to --out. Diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace curvident::cli
