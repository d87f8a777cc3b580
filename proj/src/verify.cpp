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

#include "pdc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "pdc/error.hpp"
#include "pdc/singular.hpp"

namespace pdc {
namespace {

double log_factorial(unsigned k) { return std::lgamma(static_cast<double>(k) + 1.0); }

}  // namespace

TheoremProfile profile(const ChampionRecord& record, const DifferenceSet& winner,
                       const PrimeTable& table) {
  TheoremProfile out;
  out.x = record.x;
  out.k = record.k;
  out.winner = winner;
  out.d_star = winner.gcd();

  std::uint64_t rest = out.d_star;
  bool exhausted = false;
  table.for_each_prime(2, table.bound(), [&](std::uint64_t p) {
    if (exhausted || p * p > rest) {
      exhausted = true;
      return;
    }
    if (rest % p != 0) return;
    out.prime_factors.push_back(p);
    rest /= p;
    if (rest % p == 0) out.squarefree = false;
    while (rest % p == 0) rest /= p;
  });
  if (rest > 1) {
    const std::uint64_t b = table.bound();
    if (b < rest / b && !exhausted)
      throw ResourceError("factoring d* = " + std::to_string(out.d_star) +
                          " needs primes beyond the table bound " + std::to_string(b));
    out.prime_factors.push_back(rest);
  }
  std::sort(out.prime_factors.begin(), out.prime_factors.end());
  out.omega = static_cast<unsigned>(out.prime_factors.size());

  for (const auto p : out.prime_factors) out.reciprocal_sum += 1.0L / static_cast<long double>(p);

  const double lx = std::log(static_cast<double>(record.x));
  out.logloglog_x = std::log(std::log(lx));
  if (!out.prime_factors.empty())
    out.largest_prime_over_loglog = static_cast<double>(out.prime_factors.back()) / std::log(lx);

  const std::vector<std::int64_t> with0 = with_zero(winner);
  const double two_log_x = 2.0 * lx;
  for (std::uint64_t p = 2; static_cast<double>(p) <= two_log_x; ++p) {
    if (!is_prime_u64(p)) continue;
    const long double inv = 1.0L / static_cast<long double>(p);
    if (out.d_star % p != 0) out.missing_lhs += inv;
    // p divides Delta iff two elements of {0} u D collide mod p.
    if (residue_count(with0, p) == with0.size()) out.missing_delta_lhs += inv;
  }
  const double k = static_cast<double>(record.k);
  const double tail = std::log(2.0 * (k + 1) * (k + 1));
  out.missing_rhs = log_factorial(record.k) + k * std::log(2.0) + tail;
  out.missing_delta_rhs = log_factorial(record.k) / k + std::log(2.0) + tail / k;

  for (std::uint64_t p = 2;; ++p) {
    if (!is_prime_u64(p)) continue;
    if (out.d_star % p != 0 || out.primorial_divisor > out.d_star / p) break;
    out.primorial_divisor *= p;
  }
  return out;
}

std::vector<TheoremProfile> profile_all(const ChampionRecord& record, const PrimeTable& table) {
  if (record.winners.empty()) throw DomainError("champion record has no winners");
  std::vector<TheoremProfile> out;
  for (const auto& w : record.winners) out.push_back(profile(record, w, table));
  return out;
}

std::vector<Verdict> verdicts(const TheoremProfile& p, const VerdictOptions& options) {
  if (options.slack < 0) throw DomainError("slack must be nonnegative");
  std::vector<Verdict> out;
  const bool exhaustive = options.mode == SearchMode::exhaustive;

  out.push_back({"few_primes_not_dividing_d_star", VerdictKind::assert_claim,
                 static_cast<double>(p.missing_lhs) <= p.missing_rhs + options.slack,
                 static_cast<double>(p.missing_lhs), p.missing_rhs + options.slack,
                 "sum_{p !| d*, p <= 2 log x} 1/p against log k! + k log 2 + log(2(k+1)^2) + slack"});

  out.push_back({"few_primes_not_dividing_delta", VerdictKind::report,
                 static_cast<double>(p.missing_delta_lhs) <= p.missing_delta_rhs + options.slack,
                 static_cast<double>(p.missing_delta_lhs), p.missing_delta_rhs + options.slack,
                 "same sum over p !| Delta({0} u D*), right side per element"});

  out.push_back({"d_star_squarefree",
                 exhaustive ? VerdictKind::assert_claim : VerdictKind::report, p.squarefree,
                 static_cast<double>(p.d_star), 0, exhaustive ? "" : "pruned-mode winner"});

  const bool six_asserted = exhaustive && p.k == 1 && p.x >= 10000;
  out.push_back({"six_divides_d_star",
                 six_asserted ? VerdictKind::assert_claim : VerdictKind::report,
                 p.d_star % 6 == 0, static_cast<double>(p.d_star), 6,
                 six_asserted ? "" : "asserted only for exhaustive k = 1 champions with x >= 10^4"});

  out.push_back({"reciprocal_sum_vs_logloglog_x", VerdictKind::report, true,
                 static_cast<double>(p.reciprocal_sum), p.logloglog_x,
                 "difference is the O(1) term; no threshold"});

  out.push_back({"primorial_divisor", VerdictKind::report, p.primorial_divisor > 1,
                 static_cast<double>(p.primorial_divisor), static_cast<double>(p.d_star),
                 "largest p_n# dividing d*"});
  return out;
}

bool all_asserts_hold(const std::vector<Verdict>& verdicts) {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) {
    return v.kind != VerdictKind::assert_claim || v.holds;
  });
}

}  // namespace pdc
