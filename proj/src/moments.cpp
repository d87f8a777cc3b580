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

#include "pdc/moments.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "pdc/bigint.hpp"
#include "pdc/counting.hpp"
#include "pdc/error.hpp"

namespace pdc {
namespace {

constexpr unsigned kMaxStirling = 60;

mpz_class power(std::uint64_t base, unsigned e) {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), to_mpz(base).get_mpz_t(), e);
  return out;
}

mpz_class falling(std::uint64_t n, unsigned j) {
  if (n < j) return 0;
  mpz_class out = 1;
  for (unsigned t = 0; t < j; ++t) out *= to_mpz(n - t);
  return out;
}

mpz_class factorial(unsigned n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

long double to_ld(const mpz_class& v) { return std::stold(v.get_str()); }

}  // namespace

std::uint64_t euler_phi(std::uint64_t q) {
  if (q == 0) throw DomainError("phi(0) undefined");
  std::uint64_t result = q, n = q;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

mpz_class moment_sum(const PrimeTable& table, std::uint64_t x, std::uint64_t q, unsigned k,
                     ClassSet classes) {
  if (k == 0) throw DomainError("moment order must be positive");
  const auto counts = class_counts(table, x, q);
  mpz_class total = 0;
  for (std::uint64_t a = 0; a < q; ++a) {
    if (classes == ClassSet::coprime && std::gcd(a, q) != 1) continue;
    total += power(counts[a], k);
  }
  return total;
}

mpz_class stirling2(unsigned n, unsigned j) {
  if (n > kMaxStirling) throw DomainError("Stirling numbers limited to n <= 60");
  if (j > n) return 0;
  // Row-by-row S(r, c) = c S(r-1, c) + S(r-1, c-1).
  std::vector<mpz_class> row(n + 1, 0);
  row[0] = 1;
  for (unsigned r = 1; r <= n; ++r) {
    for (unsigned c = r; c >= 1; --c) row[c] = row[c] * c + row[c - 1];
    row[0] = 0;
  }
  return row[j];
}

mpz_class stirling_coefficient(unsigned m, unsigned i) {
  if (m == 0 || i >= m)
    throw DomainError("C_{m,i} needs 0 <= i <= m - 1, got m = " + std::to_string(m) +
                      ", i = " + std::to_string(i));
  return stirling2(m, m - i);
}

mpz_class distinct_tuple_sum(const PrimeTable& table, std::uint64_t x, std::uint64_t q,
                             unsigned j) {
  if (j == 0) throw DomainError("tuple length must be positive");
  mpz_class total = 0;
  for (const std::uint64_t n : class_counts(table, x, q)) total += falling(n, j);
  return total;
}

mpz_class distinct_tuple_sum_enumerated(const PrimeTable& table, std::uint64_t x,
                                        std::uint64_t q, unsigned j) {
  if (j == 0) throw DomainError("tuple length must be positive");
  if (x > 100) throw RangeError("tuple enumeration oracle is limited to x <= 100");
  if (q == 0) throw DomainError("modulus q must be positive");
  const auto primes = table.primes(x);
  if (primes.size() < j) return 0;
  std::vector<std::size_t> pick(j, 0);
  std::uint64_t count = 0;
  // Odometer over all index j-tuples; keep distinct ones in a common class.
  for (;;) {
    bool keep = true;
    for (unsigned s = 0; s < j && keep; ++s)
      for (unsigned t = 0; t < s && keep; ++t)
        if (pick[s] == pick[t] || primes[pick[s]] % q != primes[pick[t]] % q) keep = false;
    if (keep) ++count;
    unsigned pos = 0;
    while (pos < j && ++pick[pos] == primes.size()) pick[pos++] = 0;
    if (pos == j) break;
  }
  return to_mpz(count);
}

IdentityCheck verify_power_identity(const PrimeTable& table, std::uint64_t x, std::uint64_t q,
                                    unsigned m) {
  if (m == 0 || m > 5) throw RangeError("power identity check needs 1 <= m <= 5");
  if (x > 100000) throw RangeError("power identity check needs x <= 10^5");
  IdentityCheck out;
  out.lhs = moment_sum(table, x, q, m, ClassSet::all);
  out.rhs = 0;
  for (unsigned i = 0; i < m; ++i)
    out.rhs += stirling_coefficient(m, i) * distinct_tuple_sum(table, x, q, m - i);
  out.residual = out.lhs - out.rhs;
  out.ok = out.residual == 0;
  return out;
}

IdentityCheck verify_tuple_link(const PrimeTable& table, std::uint64_t x, std::uint64_t q,
                                unsigned k, Parallelism par) {
  if (k != 2 && k != 3) throw RangeError("tuple link check supports k in {2, 3}");
  if (x > 10000) throw RangeError("tuple link check needs x <= 10^4");
  if (q == 0) throw DomainError("modulus q must be positive");

  IdentityCheck out;
  out.lhs = distinct_tuple_sum(table, x, q, k);

  // Sum G_{k-1} over sets of positive multiples of q below x, one task per
  // smallest element.
  const std::uint64_t n_first = x > 1 ? (x - 1) / q : 0;
  std::vector<std::uint64_t> partial(n_first, 0);
  parallel_for(n_first, par, [&](std::size_t t, unsigned) {
    const std::uint64_t d1 = (t + 1) * q;
    if (k == 2) {
      partial[t] = count_tuple(table, x, DifferenceSet{d1}).count;
      return;
    }
    std::uint64_t sum = 0;
    for (std::uint64_t d2 = d1 + q; d2 < x; d2 += q)
      sum += count_tuple(table, x, DifferenceSet{d1, d2}).count;
    partial[t] = sum;
  });
  const std::uint64_t total = std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
  out.rhs = factorial(k) * to_mpz(total);
  out.residual = out.lhs - out.rhs;
  out.ok = out.residual == 0;
  return out;
}

InequalityReport verify_moment_inequality(const PrimeTable& table, std::uint64_t x,
                                          std::uint64_t q, unsigned k) {
  if (k < 2) throw DomainError("moment inequality needs k >= 2");
  const long double pi_x = static_cast<long double>(table.pi(x));
  const long double phi = static_cast<long double>(euler_phi(q));
  const long double mean = pi_x / phi;

  InequalityReport r;
  r.margin_all = to_ld(moment_sum(table, x, q, k, ClassSet::all)) -
                 mean * to_ld(moment_sum(table, x, q, k - 1, ClassSet::all));
  r.margin_coprime = to_ld(moment_sum(table, x, q, k, ClassSet::coprime)) -
                     mean * (k - 1 == 0 ? phi
                                        : to_ld(moment_sum(table, x, q, k - 1,
                                                           ClassSet::coprime)));
  r.budget = std::pow(mean, static_cast<long double>(k - 1)) *
             std::log(static_cast<long double>(q));
  r.within_budget = r.margin_all >= -r.budget;
  const long double lx = std::log(static_cast<long double>(x));
  r.q_in_range = x >= 3 && static_cast<long double>(q) <= x / (lx * lx);
  return r;
}

MomentReport moment_report(const PrimeTable& table, std::uint64_t x, std::uint64_t q,
                           unsigned k) {
  if (k == 0) throw DomainError("moment order must be positive");
  MomentReport r;
  r.x = x;
  r.q = q;
  r.k = k;
  r.pi_x = x >= 2 ? table.pi(x) : 0;
  r.phi_q = euler_phi(q);

  r.coprime_moments.push_back(to_mpz(r.phi_q));
  for (unsigned j = 1; j <= std::max(k, 2u); ++j)
    r.coprime_moments.push_back(moment_sum(table, x, q, j, ClassSet::coprime));
  r.cauchy_schwarz_ok = r.coprime_moments[2] * r.coprime_moments[0] >=
                        r.coprime_moments[1] * r.coprime_moments[1];
  r.coprime_moments.resize(k + 1);

  r.full_sum = moment_sum(table, x, q, k, ClassSet::all);
  r.b_k = to_ld(r.coprime_moments[k]) -
          static_cast<long double>(r.pi_x) / r.phi_q * to_ld(r.coprime_moments[k - 1]);
  for (unsigned j = 1; j <= k; ++j) r.distinct_sums.push_back(distinct_tuple_sum(table, x, q, j));

  if (k <= 5 && x <= 100000) {
    const IdentityCheck id = verify_power_identity(table, x, q, k);
    r.identity_ok = id.ok;
    r.identity_residual = id.residual;
  } else {
    // Same identity, evaluated without the desk-scale guard.
    mpz_class rhs = 0;
    for (unsigned i = 0; i < k; ++i) rhs += stirling_coefficient(k, i) * r.distinct_sums[k - 1 - i];
    r.identity_residual = r.full_sum - rhs;
    r.identity_ok = r.identity_residual == 0;
  }
  if (k >= 2) r.inequality = verify_moment_inequality(table, x, q, k);

  if (x >= 3) {
    const long double lx = std::log(static_cast<long double>(x));
    const long double t = to_ld(distinct_tuple_sum(table, x, q, k + 1));
    r.lower_bound_ratio = static_cast<double>(
        t * std::pow(static_cast<long double>(r.phi_q), static_cast<long double>(k)) *
        std::pow(lx, static_cast<long double>(k + 1)) /
        std::pow(static_cast<long double>(x), static_cast<long double>(k + 1)));
  }
  return r;
}

}  // namespace pdc
