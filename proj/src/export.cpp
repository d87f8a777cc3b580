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

#include "pdc/export.hpp"

#include <cmath>
#include <cstdio>
#include <optional>
#include <type_traits>
#include <numeric>

#include "pdc/bigint.hpp"

namespace pdc {

std::string format_real(long double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10Lg", v);
  return buf;
}

namespace {

// Reals go out as JSON numbers rounded to 10 significant digits.
nlohmann::json real(long double v) {
  if (!std::isfinite(static_cast<double>(v))) return format_real(v);
  return std::stod(format_real(v));
}

template <class T>
nlohmann::json opt(const std::optional<T>& v) {
  if (!v) return nullptr;
  if constexpr (std::is_floating_point_v<T>) return real(*v);
  else return *v;
}

std::string join_sets(const std::vector<DifferenceSet>& sets) {
  std::string out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (i) out += ';';
    out += sets[i].to_string();
  }
  return out;
}

}  // namespace

nlohmann::json big_to_json(const mpz_class& v) {
  if (auto u = to_u64(v)) return *u;
  return v.get_str();
}

nlohmann::json to_json(const DifferenceSet& d) {
  return std::vector<std::uint64_t>(d.elements().begin(), d.elements().end());
}

nlohmann::json to_json(const SingularValue& s) {
  return {{"value", real(s.value)},
          {"truncation_prime", s.truncation_prime},
          {"tail_bound", real(s.tail_bound)},
          {"is_zero", s.is_zero}};
}

nlohmann::json to_json(const Prediction& p) {
  return {{"x", p.x},
          {"k", p.set.k()},
          {"D", to_json(p.set)},
          {"singular", to_json(p.singular)},
          {"li", real(p.li)},
          {"quadrature_error", real(p.quadrature_error)},
          {"predicted", real(p.predicted)},
          {"exact", opt(p.exact)},
          {"ratio", opt(p.ratio)},
          {"normalized_error", opt(p.normalized_error)}};
}

nlohmann::json to_json(const MomentReport& r) {
  nlohmann::json a = nlohmann::json::array(), t = nlohmann::json::array();
  for (const auto& v : r.coprime_moments) a.push_back(big_to_json(v));
  for (const auto& v : r.distinct_sums) t.push_back(big_to_json(v));
  nlohmann::json out = {{"x", r.x},
                        {"q", r.q},
                        {"k", r.k},
                        {"pi_x", r.pi_x},
                        {"phi_q", r.phi_q},
                        {"coprime_moments", a},
                        {"full_sum", big_to_json(r.full_sum)},
                        {"b_k", real(r.b_k)},
                        {"distinct_sums", t},
                        {"identity_ok", r.identity_ok},
                        {"identity_residual", big_to_json(r.identity_residual)},
                        {"cauchy_schwarz_ok", r.cauchy_schwarz_ok},
                        {"lower_bound_ratio", real(r.lower_bound_ratio)}};
  if (r.k >= 2) {
    out["inequality"] = {{"margin_all", real(r.inequality.margin_all)},
                         {"margin_coprime", real(r.inequality.margin_coprime)},
                         {"budget", real(r.inequality.budget)},
                         {"within_budget", r.inequality.within_budget},
                         {"q_in_range", r.inequality.q_in_range}};
  }
  return out;
}

nlohmann::json to_json(const ChampionRecord& r) {
  nlohmann::json winners = nlohmann::json::array(), runners = nlohmann::json::array();
  for (const auto& w : r.winners) winners.push_back(to_json(w));
  for (const auto& rs : r.runners_up) runners.push_back({{"D", to_json(rs.set)}, {"count", rs.count}});
  nlohmann::json out = {{"x", r.x},
                        {"k", r.k},
                        {"mode", std::string(mode_name(r.mode))},
                        {"max_count", r.max_count},
                        {"winners", winners},
                        {"runners_up", runners},
                        {"search_space", r.search_space},
                        {"winners_below_half_x", r.winners_below_half_x}};
  if (!r.winners.empty()) out["gcd"] = r.winners.front().gcd();
  return out;
}

nlohmann::json to_json(const TheoremProfile& p) {
  return {{"x", p.x},
          {"k", p.k},
          {"winner", to_json(p.winner)},
          {"d_star", p.d_star},
          {"prime_factors", p.prime_factors},
          {"omega", p.omega},
          {"reciprocal_sum", real(p.reciprocal_sum)},
          {"logloglog_x", real(p.logloglog_x)},
          {"missing_lhs", real(p.missing_lhs)},
          {"missing_rhs", real(p.missing_rhs)},
          {"missing_delta_lhs", real(p.missing_delta_lhs)},
          {"missing_delta_rhs", real(p.missing_delta_rhs)},
          {"squarefree", p.squarefree},
          {"primorial_divisor", p.primorial_divisor},
          {"largest_prime_over_loglog", real(p.largest_prime_over_loglog)}};
}

nlohmann::json to_json(const Verdict& v) {
  return {{"claim", v.claim},
          {"kind", v.kind == VerdictKind::assert_claim ? "assert" : "report"},
          {"holds", v.holds},
          {"lhs", real(v.lhs)},
          {"rhs", real(v.rhs)},
          {"note", v.note}};
}

nlohmann::json to_json(const GapHistogram& h) {
  nlohmann::json counts = nlohmann::json::object();
  for (const auto& [gap, c] : h.counts) counts[std::to_string(gap)] = c;
  return {{"x", h.x}, {"counts", counts}, {"max_count", h.max_count}, {"argmax", h.argmax}};
}

void write_gap_csv(std::ostream& os, const GapHistogram& h) {
  os << "d,count\n";
  for (const auto& [gap, c] : h.counts) os << gap << ',' << c << '\n';
}

void write_pair_csv(std::ostream& os, const PairHistogram& h) {
  os << "d,count\n";
  for (std::uint64_t d = 1; d <= h.d_max; ++d) os << d << ',' << h.counts[d] << '\n';
}

void write_histogram_csv(std::ostream& os, const std::vector<std::uint64_t>& d,
                         const std::vector<std::uint64_t>& counts) {
  os << "d,count\n";
  for (std::size_t i = 0; i < d.size() && i < counts.size(); ++i)
    os << d[i] << ',' << counts[i] << '\n';
}

void write_champions_header(std::ostream& os) {
  os << "x,k,mode,max_count,winners,gcd,runner_ups\n";
}

void write_champion_row(std::ostream& os, const ChampionRecord& r) {
  os << r.x << ',' << r.k << ',' << mode_name(r.mode) << ',' << r.max_count << ','
     << join_sets(r.winners) << ',';
  if (!r.winners.empty()) os << r.winners.front().gcd();
  os << ',';
  for (std::size_t i = 0; i < r.runners_up.size(); ++i) {
    if (i) os << ';';
    os << r.runners_up[i].set.to_string() << '=' << r.runners_up[i].count;
  }
  os << '\n';
}

void write_prediction_csv(std::ostream& os, const std::vector<Prediction>& rows) {
  os << "x,k,D,singular,tail_bound,predicted,exact,ratio,normalized_error\n";
  for (const auto& p : rows) {
    os << p.x << ',' << p.set.k() << ',' << p.set.to_string() << ','
       << format_real(p.singular.value) << ',' << format_real(p.singular.tail_bound) << ','
       << format_real(p.predicted) << ',';
    if (p.exact) os << *p.exact;
    os << ',';
    if (p.ratio) os << format_real(*p.ratio);
    os << ',';
    if (p.normalized_error) os << format_real(*p.normalized_error);
    os << '\n';
  }
}

void write_verdicts_csv(std::ostream& os, const std::vector<TheoremProfile>& profiles,
                        const std::vector<std::vector<Verdict>>& verdicts) {
  os << "x,k,winner,d_star,claim,kind,holds,lhs,rhs\n";
  for (std::size_t i = 0; i < profiles.size(); ++i) {
    const auto& p = profiles[i];
    for (const auto& v : verdicts[i]) {
      os << p.x << ',' << p.k << ',' << p.winner.to_string() << ',' << p.d_star << ','
         << v.claim << ',' << (v.kind == VerdictKind::assert_claim ? "assert" : "report") << ','
         << (v.holds ? "pass" : "fail") << ',' << format_real(v.lhs) << ','
         << format_real(v.rhs) << '\n';
    }
  }
}

}  // namespace pdc
