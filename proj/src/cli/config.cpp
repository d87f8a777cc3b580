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

#include <algorithm>
#include <cmath>
#include <string>

#include <CLI11.hpp>

#include "pdc/cli.hpp"
#include "pdc/difference_set.hpp"
#include "pdc/error.hpp"

namespace pdc::cli {

nlohmann::json to_json(const RunConfig& c) {
  return {{"command", c.command},
          {"x_grid", c.x_grid},
          {"k", c.k},
          {"mode", c.mode},
          {"tolerance", c.tolerance},
          {"set", c.set},
          {"d_max", c.d_max},
          {"q", c.q},
          {"runners", c.runners},
          {"pattern_bound", c.pattern_bound},
          {"multiplier_max", c.multiplier_max},
          {"exhaustive_limit", c.exhaustive_limit},
          {"slack", c.slack},
          {"threads", c.threads},
          {"format", c.format},
          {"out", c.out},
          {"cache_dir", c.cache_dir},
          {"segment_bytes", c.segment_bytes}};
}

RunConfig config_from_json(const nlohmann::json& j) {
  RunConfig c;
  try {
    j.at("command").get_to(c.command);
    j.at("x_grid").get_to(c.x_grid);
    j.at("k").get_to(c.k);
    j.at("mode").get_to(c.mode);
    j.at("tolerance").get_to(c.tolerance);
    j.at("set").get_to(c.set);
    j.at("d_max").get_to(c.d_max);
    j.at("q").get_to(c.q);
    j.at("runners").get_to(c.runners);
    j.at("pattern_bound").get_to(c.pattern_bound);
    j.at("multiplier_max").get_to(c.multiplier_max);
    j.at("exhaustive_limit").get_to(c.exhaustive_limit);
    j.at("slack").get_to(c.slack);
    j.at("threads").get_to(c.threads);
    j.at("format").get_to(c.format);
    j.at("out").get_to(c.out);
    j.at("cache_dir").get_to(c.cache_dir);
    j.at("segment_bytes").get_to(c.segment_bytes);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed config: ") + e.what());
  }
  return c;
}

std::uint64_t parse_count(const std::string& text) {
  const auto bad = [&] { return UsageError("not a nonnegative integer: '" + text + "'"); };
  if (text.empty()) throw bad();
  const auto caret = text.find('^');
  const auto e = text.find_first_of("eE");
  if (caret != std::string::npos || e != std::string::npos) {
    const auto pos = caret != std::string::npos ? caret : e;
    const std::string base_s = text.substr(0, pos), exp_s = text.substr(pos + 1);
    if (base_s.empty() || exp_s.empty() ||
        !std::all_of(exp_s.begin(), exp_s.end(), ::isdigit))
      throw bad();
    // "10^6" raises the base; "2e6" scales the mantissa by a power of ten.
    std::uint64_t mantissa = parse_count(base_s);
    const unsigned power = static_cast<unsigned>(std::stoul(exp_s));
    std::uint64_t value = caret != std::string::npos ? 1 : mantissa;
    const std::uint64_t factor = caret != std::string::npos ? mantissa : 10;
    for (unsigned i = 0; i < power; ++i) {
      if (factor != 0 && value > UINT64_MAX / factor) throw UsageError("integer overflow: " + text);
      value *= factor;
    }
    return value;
  }
  if (!std::all_of(text.begin(), text.end(), ::isdigit)) throw bad();
  try {
    return std::stoull(text);
  } catch (const std::exception&) {
    throw UsageError("integer overflow: " + text);
  }
}

std::vector<std::uint64_t> parse_grid(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::string item;
  for (const char ch : text + ",") {
    if (ch == ',' || ch == ';' || ch == ' ') {
      if (!item.empty()) out.push_back(parse_count(item));
      item.clear();
    } else {
      item += ch;
    }
  }
  if (out.empty()) throw UsageError("empty x grid");
  return out;
}

void validate(const RunConfig& c) {
  const auto& names = commands();
  if (std::find(names.begin(), names.end(), c.command) == names.end())
    throw UsageError("unknown command '" + c.command + "'");
  if (c.format != "csv" && c.format != "json")
    throw UsageError("format must be csv or json, got '" + c.format + "'");
  if (c.mode != "exhaustive" && c.mode != "pruned")
    throw UsageError("mode must be exhaustive or pruned, got '" + c.mode + "'");
  if (!(c.tolerance > 0 && c.tolerance < 1)) throw UsageError("tolerance must lie in (0, 1)");
  if (!(c.slack >= 0) || !std::isfinite(c.slack)) throw UsageError("slack must be nonnegative");
  if (c.threads > 4096) throw UsageError("thread count too large");
  if (c.segment_bytes < 8) throw UsageError("segment size must be at least 8 bytes");
  if (c.k == 0) throw UsageError("k must be positive");

  const bool needs_x = c.command != "singular";
  if (needs_x && c.x_grid.empty()) throw UsageError(c.command + " needs --x or --grid");
  if (!needs_x && !c.x_grid.empty()) throw UsageError("singular takes no --x");
  for (const auto x : c.x_grid)
    if (x < 2) throw UsageError("x must be at least 2");
  if (c.x_grid.size() > 1) {
    if (!std::is_sorted(c.x_grid.begin(), c.x_grid.end()) ||
        std::adjacent_find(c.x_grid.begin(), c.x_grid.end()) != c.x_grid.end())
      throw UsageError("x grid must be strictly ascending");
    if (c.command != "champions" && c.command != "verify" && c.command != "predict" &&
        c.command != "sieve")
      throw UsageError(c.command + " takes a single x");
  }

  const bool needs_set = c.command == "count" || c.command == "predict" || c.command == "singular";
  if (needs_set && c.set.empty()) throw UsageError(c.command + " needs --set");
  if (!needs_set && !c.set.empty()) throw UsageError(c.command + " takes no --set");
  if (c.command == "count" || c.command == "predict") {
    for (const auto d : c.set)
      if (d <= 0) throw UsageError("difference set elements must be positive");
    std::vector<std::int64_t> s = c.set;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw UsageError("difference set elements must be distinct");
  }
  if (c.command == "moments") {
    if (c.q == 0) throw UsageError("q must be positive");
    if (c.k > 8) throw UsageError("moments supports k <= 8");
  }
  if (c.mode == "pruned" && c.command != "champions" && c.command != "verify")
    throw UsageError("--mode applies to champions and verify");
}

RunConfig parse_args(int argc, const char* const* argv) {
  CLI::App app{"Prime difference champion toolkit"};
  app.require_subcommand(1);
  RunConfig c;
  std::string x, grid, set, dmax, q, limit;

  app.add_option("--x", x, "upper bound x (1000, 1e6 or 10^6)");
  app.add_option("--grid", grid, "ascending x values, comma separated");
  app.add_option("--k", c.k, "number of differences / moment order")->check(CLI::PositiveNumber);
  app.add_option("--mode", c.mode, "champion search mode")
      ->check(CLI::IsMember({"exhaustive", "pruned"}));
  app.add_option("--tol", c.tolerance, "singular series / quadrature tolerance");
  app.add_option("--set", set, "integer set, e.g. 2,6");
  app.add_option("--dmax", dmax, "largest difference in the pair histogram");
  app.add_option("--q", q, "modulus");
  app.add_option("--runners", c.runners, "runner-up list size");
  app.add_option("--pattern-bound", c.pattern_bound, "pruned mode: largest reduced element");
  app.add_option("--multiplier-max", c.multiplier_max, "pruned mode: largest primorial multiplier");
  app.add_option("--exhaustive-limit", limit, "largest x for exhaustive k >= 2 search");
  app.add_option("--slack", c.slack, "additive slack for verified inequalities");
  app.add_option("--threads", c.threads, "worker threads (0: all)");
  app.add_option("--format", c.format, "output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", c.out, "output file (default stdout)");
  app.add_option("--cache-dir", c.cache_dir, "sieve cache directory")->envname("PDC_CACHE_DIR");
  app.add_option("--segment-bytes", c.segment_bytes, "sieve segment size");

  for (const auto& name : commands()) app.add_subcommand(name)->fallthrough();

  app.parse(argc, argv);
  c.command = app.get_subcommands().front()->get_name();
  if (!x.empty() && !grid.empty()) throw UsageError("give --x or --grid, not both");
  if (!x.empty()) c.x_grid = {parse_count(x)};
  if (!grid.empty()) c.x_grid = parse_grid(grid);
  if (!dmax.empty()) c.d_max = parse_count(dmax);
  if (!q.empty()) c.q = parse_count(q);
  if (!limit.empty()) c.exhaustive_limit = parse_count(limit);
  if (!set.empty()) {
    try {
      c.set = parse_integer_list(set);
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  }
  validate(c);
  return c;
}

}  // namespace pdc::cli
