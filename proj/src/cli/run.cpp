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
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "pdc/champions.hpp"
#include "pdc/cli.hpp"
#include "pdc/counting.hpp"
#include "pdc/error.hpp"
#include "pdc/export.hpp"
#include "pdc/hardy_littlewood.hpp"
#include "pdc/moments.hpp"
#include "pdc/sieve.hpp"
#include "pdc/singular.hpp"
#include "pdc/verify.hpp"

namespace pdc::cli {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

Parallelism parallelism(const RunConfig& c) { return Parallelism{c.threads}; }

std::shared_ptr<const PrimeTable> acquire_table(const RunConfig& c, std::uint64_t bound,
                                                std::ostream& err) {
  SieveOptions options;
  options.segment_bytes = static_cast<std::size_t>(c.segment_bytes);
  options.parallelism = parallelism(c);
  if (c.cache_dir.empty()) return std::make_shared<const PrimeTable>(build_table(bound, options));

  const fs::path dir(c.cache_dir);
  const fs::path file = dir / ("pdcs-" + std::to_string(bound) + ".bin");
  if (fs::exists(file)) {
    try {
      auto table = load_table(file);
      if (table.bound() == bound) return std::make_shared<const PrimeTable>(std::move(table));
    } catch (const FormatError& e) {
      err << "warning: rebuilding corrupt cache " << file.string() << ": " << e.what() << '\n';
    }
  }
  auto table = build_table(bound, options);
  fs::create_directories(dir);
  const fs::path tmp = file.string() + ".tmp";
  save_table(table, tmp);
  fs::rename(tmp, file);
  return std::make_shared<const PrimeTable>(std::move(table));
}

DifferenceSet positive_set(const RunConfig& c) {
  std::vector<std::uint64_t> v;
  for (const auto d : c.set) v.push_back(static_cast<std::uint64_t>(d));
  return DifferenceSet(std::move(v));
}

PdcOptions pdc_options(const RunConfig& c) {
  PdcOptions o;
  o.mode = parse_mode(c.mode);
  o.runners_up = static_cast<std::size_t>(c.runners);
  o.multiplier_max = c.multiplier_max;
  o.pattern_bound = c.pattern_bound;
  o.parallelism = parallelism(c);
  if (c.exhaustive_limit != 0) {
    if (c.k == 2) o.limits.max_x_k2 = c.exhaustive_limit;
    else if (c.k == 3) o.limits.max_x_k3 = c.exhaustive_limit;
    else o.limits.max_x_k4_plus = c.exhaustive_limit;
  }
  return o;
}

struct Output {
  int status = kExitOk;
  json result;
  std::string csv;
};

Output cmd_sieve(const RunConfig& c, const PrimeTable& t) {
  Output o;
  std::ostringstream csv;
  json rows = json::array();
  if (c.q > 1) csv << "x,q,a,count\n";
  else csv << "x,pi\n";
  for (const auto x : c.x_grid) {
    json row = {{"x", x}, {"pi", t.pi(x)}};
    if (c.q > 1) {
      const auto counts = class_counts(t, x, c.q);
      row["q"] = c.q;
      row["classes"] = counts;
      for (std::size_t a = 0; a < counts.size(); ++a)
        csv << x << ',' << c.q << ',' << a << ',' << counts[a] << '\n';
    } else {
      csv << x << ',' << t.pi(x) << '\n';
    }
    rows.push_back(row);
  }
  o.result = rows;
  o.csv = csv.str();
  return o;
}

Output cmd_gaps(const RunConfig& c, const PrimeTable& t) {
  Output o;
  const std::uint64_t x = c.x_grid.front();
  const auto h = gap_histogram(t, x);
  o.result = to_json(h);
  o.result["jumping_champion"] = to_json(jumping_champion(t, x, c.runners));
  std::ostringstream csv;
  write_gap_csv(csv, h);
  o.csv = csv.str();
  return o;
}

Output cmd_histogram(const RunConfig& c, const PrimeTable& t) {
  Output o;
  const std::uint64_t x = c.x_grid.front();
  const std::uint64_t d_max = c.d_max ? c.d_max : std::min<std::uint64_t>(x - 1, 1000);
  const auto h = pair_difference_histogram(t, x, d_max, parallelism(c));
  json counts = json::object();
  for (std::uint64_t d = 1; d <= d_max; ++d) counts[std::to_string(d)] = h.counts[d];
  o.result = {{"x", x}, {"d_max", d_max}, {"counts", counts}};
  std::ostringstream csv;
  write_pair_csv(csv, h);
  o.csv = csv.str();
  return o;
}

Output cmd_count(const RunConfig& c, const PrimeTable& t) {
  Output o;
  const std::uint64_t x = c.x_grid.front();
  const auto d = positive_set(c);
  const auto r = count_tuple(t, x, d);
  o.result = {{"x", x}, {"D", to_json(d)}, {"count", r.count}, {"degenerate", r.degenerate}};
  o.csv = "x,D,count\n" + std::to_string(x) + ',' + d.to_string() + ',' +
          std::to_string(r.count) + '\n';
  return o;
}

Output cmd_champions(const RunConfig& c, const PrimeTable& t) {
  Output o;
  const auto records = champion_scan(t, c.x_grid, c.k, pdc_options(c));
  std::ostringstream csv;
  write_champions_header(csv);
  json arr = json::array();
  for (const auto& r : records) {
    write_champion_row(csv, r);
    arr.push_back(to_json(r));
  }
  o.result = arr;
  o.csv = csv.str();
  return o;
}

Output cmd_singular(const RunConfig& c) {
  Output o;
  const auto s = singular_series(c.set, c.tolerance);
  std::string set_text;
  for (std::size_t i = 0; i < c.set.size(); ++i)
    set_text += (i ? " " : "") + std::to_string(c.set[i]);
  o.result = to_json(s);
  o.result["set"] = c.set;
  o.csv = "set,value,truncation_prime,tail_bound,is_zero\n" + set_text + ',' +
          format_real(s.value) + ',' + std::to_string(s.truncation_prime) + ',' +
          format_real(s.tail_bound) + ',' + (s.is_zero ? "true" : "false") + '\n';
  return o;
}

Output cmd_predict(const RunConfig& c, const PrimeTable& t) {
  Output o;
  const auto d = positive_set(c);
  std::vector<Prediction> rows;
  json arr = json::array();
  for (const auto x : c.x_grid) {
    rows.push_back(predict(t, x, d, c.tolerance));
    arr.push_back(to_json(rows.back()));
  }
  o.result = arr;
  std::ostringstream csv;
  write_prediction_csv(csv, rows);
  o.csv = csv.str();
  return o;
}

Output cmd_moments(const RunConfig& c, const PrimeTable& t) {
  Output o;
  const auto r = moment_report(t, c.x_grid.front(), c.q, c.k);
  o.result = to_json(r);
  std::ostringstream csv;
  csv << "x,q,k,pi_x,phi_q,A_k,full_sum,B_k,T_k,identity_ok,cauchy_schwarz_ok,within_budget,"
         "q_in_range,lower_bound_ratio\n";
  csv << r.x << ',' << r.q << ',' << r.k << ',' << r.pi_x << ',' << r.phi_q << ','
      << r.coprime_moments.back().get_str() << ',' << r.full_sum.get_str() << ','
      << format_real(r.b_k) << ',' << r.distinct_sums.back().get_str() << ','
      << (r.identity_ok ? "true" : "false") << ',' << (r.cauchy_schwarz_ok ? "true" : "false")
      << ',';
  if (r.k >= 2)
    csv << (r.inequality.within_budget ? "true" : "false") << ','
        << (r.inequality.q_in_range ? "true" : "false");
  else
    csv << ',';
  csv << ',' << format_real(r.lower_bound_ratio) << '\n';
  o.csv = csv.str();
  return o;
}

Output cmd_verify(const RunConfig& c, const PrimeTable& t) {
  Output o;
  const auto options = pdc_options(c);
  const auto records = champion_scan(t, c.x_grid, c.k, options);
  std::vector<TheoremProfile> profiles;
  std::vector<std::vector<Verdict>> all;
  json items = json::array();
  bool ok = true;
  // Trend of the reciprocal sum across the grid, first winner per x.
  json trend = json::array();
  long double previous = -1;
  bool nondecreasing = true;
  for (const auto& r : records) {
    const auto ps = profile_all(r, t);
    for (const auto& p : ps) {
      auto v = verdicts(p, VerdictOptions{c.slack, r.mode});
      ok = ok && all_asserts_hold(v);
      json vj = json::array();
      for (const auto& one : v) vj.push_back(to_json(one));
      items.push_back({{"profile", to_json(p)}, {"verdicts", vj}});
      profiles.push_back(p);
      all.push_back(std::move(v));
    }
    const long double s = ps.front().reciprocal_sum;
    if (s < previous) nondecreasing = false;
    previous = s;
    trend.push_back({{"x", r.x}, {"reciprocal_sum", std::stod(format_real(s))},
                     {"logloglog_x", std::stod(format_real(ps.front().logloglog_x))}});
  }
  o.result = {{"records", json::array()},
              {"profiles", items},
              {"reciprocal_sum_trend", trend},
              {"reciprocal_sum_nondecreasing", nondecreasing},
              {"all_asserts_hold", ok}};
  for (const auto& r : records) o.result["records"].push_back(to_json(r));
  std::ostringstream csv;
  write_verdicts_csv(csv, profiles, all);
  o.csv = csv.str();
  o.status = ok ? kExitOk : kExitAssert;
  return o;
}

std::string error_type(const std::exception& e) {
  if (dynamic_cast<const InsufficientPrimesError*>(&e)) return "insufficient_primes";
  if (dynamic_cast<const RangeError*>(&e)) return "range";
  if (dynamic_cast<const DomainError*>(&e)) return "domain";
  if (dynamic_cast<const ResourceError*>(&e)) return "resource";
  if (dynamic_cast<const FormatError*>(&e)) return "format";
  return "internal";
}

void report_error(std::ostream& err, const std::string& type, const std::string& message) {
  err << json{{"error", {{"type", type}, {"message", message}}}}.dump() << '\n';
}

}  // namespace

int execute(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    Output o;
    if (c.command == "singular") {
      o = cmd_singular(c);
    } else {
      const auto table = acquire_table(c, c.x_grid.back(), err);
      const PrimeTable& t = *table;
      if (c.command == "sieve") o = cmd_sieve(c, t);
      else if (c.command == "gaps") o = cmd_gaps(c, t);
      else if (c.command == "histogram") o = cmd_histogram(c, t);
      else if (c.command == "count") o = cmd_count(c, t);
      else if (c.command == "champions") o = cmd_champions(c, t);
      else if (c.command == "predict") o = cmd_predict(c, t);
      else if (c.command == "moments") o = cmd_moments(c, t);
      else if (c.command == "verify") o = cmd_verify(c, t);
      else throw UsageError("unknown command '" + c.command + "'");
    }

    std::string text;
    if (c.format == "json") text = json{{"config", to_json(c)}, {"result", o.result}}.dump(2) + '\n';
    else text = o.csv;

    if (c.out.empty()) {
      out << text;
    } else {
      std::ofstream f(c.out, std::ios::binary);
      f << text;
      if (!f) throw ResourceError("cannot write " + c.out);
    }
    return o.status;
  } catch (const UsageError& e) {
    report_error(err, "usage", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    report_error(err, error_type(e), e.what());
    return kExitFailure;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  try {
    config = parse_args(argc, argv);
  } catch (const CLI::Success&) {
    // --help
    out << "usage: pdc <" ;
    for (std::size_t i = 0; i < commands().size(); ++i) out << (i ? "|" : "") << commands()[i];
    out << "> [--x N | --grid a,b,...] [--k K] [--mode exhaustive|pruned] [--tol T]\n"
           "           [--set d1,d2,...] [--dmax D] [--q Q] [--runners N] [--pattern-bound B]\n"
           "           [--multiplier-max M] [--exhaustive-limit X] [--slack S] [--threads N]\n"
           "           [--format csv|json] [--out FILE] [--cache-dir DIR] [--segment-bytes B]\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    report_error(err, "usage", e.what());
    return kExitUsage;
  } catch (const UsageError& e) {
    report_error(err, "usage", e.what());
    return kExitUsage;
  }
  return execute(config, out, err);
}

}  // namespace pdc::cli
