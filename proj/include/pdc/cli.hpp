// Copyright 2026 The pdc Authors
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

// Command-line front end: `pdc <command> [flags]`.
//
// Exit status: 0 success, 1 computation failure (JSON error on stderr),
// 2 usage error, 3 an assert-class verdict failed.

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace pdc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitAssert = 3;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::string command;
  std::vector<std::uint64_t> x_grid;  // --x gives a one-element grid
  unsigned k = 1;
  std::string mode = "exhaustive";
  double tolerance = 1e-6;
  std::vector<std::int64_t> set;
  std::uint64_t d_max = 0;  // 0: min(x - 1, 1000)
  std::uint64_t q = 1;
  std::uint64_t runners = 5;
  unsigned pattern_bound = 0;  // 0: 12 k
  unsigned multiplier_max = 30;
  std::uint64_t exhaustive_limit = 0;  // 0: module default for k
  double slack = 1.0;
  unsigned threads = 0;  // 0: available parallelism
  std::string format = "csv";
  std::string out;        // empty: stdout
  std::string cache_dir;  // empty: no cache
  std::uint64_t segment_bytes = 32 * 1024;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> names = {"sieve",    "gaps",    "histogram",
                                                 "count",    "champions", "singular",
                                                 "predict",  "moments", "verify"};
  return names;
}

nlohmann::json to_json(const RunConfig& config);
RunConfig config_from_json(const nlohmann::json& j);

// Rejects invalid combinations; throws UsageError.
void validate(const RunConfig& config);

// Integer from "1000", "10^6" or "1e6". Throws UsageError.
std::uint64_t parse_count(const std::string& text);
std::vector<std::uint64_t> parse_grid(const std::string& text);

// Parses argv into a validated config. Throws CLI::ParseError or UsageError.
RunConfig parse_args(int argc, const char* const* argv);

// Runs one parsed config. Output goes to `out` unless config.out is set.
int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pdc::cli
