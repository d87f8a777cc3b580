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

#include "pdc/singular.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pdc/bigint.hpp"
#include "pdc/error.hpp"
#include "pdc/sieve.hpp"

namespace pdc {
namespace {

// Rosser-Schoenfeld: pi(t) < 1.25506 t / log t for t > 1.
constexpr double kPiUpperConstant = 1.25506;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  base %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t largest_prime_factor(std::uint64_t n) {
  std::uint64_t largest = 1;
  for (std::uint64_t f = 2; f * f <= n; f += (f == 2 ? 1 : 2)) {
    while (n % f == 0) {
      largest = f;
      n /= f;
    }
  }
  return n > 1 ? std::max(largest, n) : largest;
}

std::uint64_t residue(std::int64_t v, std::uint64_t p) {
  const auto sp = static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(((v % sp) + sp) % sp);
}

std::uint64_t residue_count_unchecked(std::span<const std::int64_t> set, std::uint64_t p) {
  std::vector<std::uint64_t> seen;
  seen.reserve(set.size());
  for (const std::int64_t v : set) seen.push_back(residue(v, p));
  std::sort(seen.begin(), seen.end());
  return static_cast<std::uint64_t>(std::unique(seen.begin(), seen.end()) - seen.begin());
}

std::vector<std::int64_t> validated(std::span<const std::int64_t> set) {
  if (set.empty()) throw DomainError("singular series needs a nonempty set");
  std::vector<std::int64_t> sorted(set.begin(), set.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw DomainError("singular series set has repeated elements");
  return sorted;
}

// Largest prime dividing any pairwise difference (1 for a singleton).
std::uint64_t largest_delta_prime(const std::vector<std::int64_t>& sorted) {
  std::uint64_t largest = 1;
  for (std::size_t i = 0; i < sorted.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      largest = std::max(largest, largest_prime_factor(
                                      static_cast<std::uint64_t>(sorted[i] - sorted[j])));
  return largest;
}

// Zero iff some p <= m has every class occupied.
bool vanishes(const std::vector<std::int64_t>& sorted) {
  const std::uint64_t m = sorted.size();
  for (std::uint64_t p = 2; p <= m; ++p)
    if (is_prime_u64(p) && residue_count_unchecked(sorted, p) == p) return true;
  return false;
}

SingularValue evaluate(const std::vector<std::int64_t>& sorted, std::uint64_t truncation) {
  const std::size_t m = sorted.size();
  const long double lm = static_cast<long double>(m);
  const auto table = shared_prime_table(truncation);
  const auto spread = static_cast<std::uint64_t>(sorted.back() - sorted.front());

  // Kahan-compensated sum of log factors.
  long double sum = 0, carry = 0;
  std::uint64_t last = 0;
  table->for_each_prime(2, truncation, [&](std::uint64_t p) {
    const long double inv = 1.0L / static_cast<long double>(p);
    const long double v =
        p > spread ? lm : static_cast<long double>(residue_count_unchecked(sorted, p));
    const long double term = -lm * std::log1p(-inv) + std::log1p(-v * inv);
    const long double y = term - carry;
    const long double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
    last = p;
  });
  SingularValue out;
  out.value = std::exp(sum);
  out.truncation_prime = last;
  out.tail_bound = singular_tail_bound(m, truncation);
  return out;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (const std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  // These bases are deterministic for all n < 2^64.
  for (const std::uint64_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t residue_count(std::span<const std::int64_t> set, std::uint64_t p) {
  if (set.empty()) throw DomainError("residue count of an empty set");
  if (!is_prime_u64(p)) throw DomainError(std::to_string(p) + " is not prime");
  return residue_count_unchecked(set, p);
}

mpz_class delta(const DifferenceSet& d) { return d.delta(); }

std::vector<std::int64_t> with_zero(const DifferenceSet& d) {
  std::vector<std::int64_t> out{0};
  for (const std::uint64_t v : d.elements()) out.push_back(static_cast<std::int64_t>(v));
  return out;
}

double singular_tail_bound(std::size_t m, std::uint64_t truncation) {
  if (m <= 1) return 0.0;
  const double p = static_cast<double>(truncation);
  const double log_bound = 2.0 * kPiUpperConstant * static_cast<double>(m * m) / (p * std::log(p));
  return std::expm1(log_bound);
}

SingularValue singular_series_truncated(std::span<const std::int64_t> set,
                                        std::uint64_t truncation) {
  const auto sorted = validated(set);
  if (sorted.size() == 1) return {1.0L, 0, 0.0, false};
  if (vanishes(sorted)) return {0.0L, 0, 0.0, true};
  if (truncation < 2 * sorted.size())
    throw DomainError("truncation point must be at least 2|D|");
  if (const std::uint64_t need = largest_delta_prime(sorted); need > truncation)
    throw DomainError("truncation " + std::to_string(truncation) +
                      " is below the prime " + std::to_string(need) +
                      " dividing a difference");
  return evaluate(sorted, truncation);
}

SingularValue singular_series(std::span<const std::int64_t> set, double tolerance,
                              const SingularOptions& options) {
  if (!(tolerance > 0.0 && tolerance < 1.0))
    throw DomainError("singular series tolerance must lie in (0, 1)");
  const auto sorted = validated(set);
  if (sorted.size() == 1) return {1.0L, 0, 0.0, false};
  if (vanishes(sorted)) return {0.0L, 0, 0.0, true};

  const std::uint64_t m = sorted.size();
  std::uint64_t truncation =
      std::max({options.min_truncation, 100 * m * m, largest_delta_prime(sorted)});
  while (singular_tail_bound(m, truncation) >= tolerance) {
    if (truncation >= options.max_truncation) {
      throw ResourceError("singular series tail bound " +
                          std::to_string(singular_tail_bound(m, options.max_truncation)) +
                          " at the factor budget " + std::to_string(options.max_truncation) +
                          " does not reach tolerance " + std::to_string(tolerance));
    }
    truncation = std::min(truncation * 2, options.max_truncation);
  }
  return evaluate(sorted, truncation);
}

long double mertens_product(double y) {
  if (!(y >= 2.0)) throw DomainError("Mertens product needs y >= 2");
  const auto limit = static_cast<std::uint64_t>(std::floor(y));
  const auto table = shared_prime_table(limit);
  long double sum = 0, carry = 0;
  table->for_each_prime(2, limit, [&](std::uint64_t p) {
    const long double term = -std::log1p(-1.0L / static_cast<long double>(p));
    const long double t = sum + (term - carry);
    carry = (t - sum) - (term - carry);
    sum = t;
  });
  return std::exp(sum);
}

Primorial primorial(unsigned n) {
  if (n == 0) throw DomainError("primorial index starts at 1");
  Primorial out;
  std::uint64_t p = 1;
  for (unsigned i = 0; i < n; ++i) {
    do ++p;
    while (!is_prime_u64(p));
    out.value *= to_mpz(p);
  }
  out.index = n;
  out.largest_prime = p;
  return out;
}

Primorial primorial_floor(const mpz_class& x) {
  if (x < 2) throw DomainError("primorial floor needs x >= 2");
  Primorial out{1, 2, 2};
  std::uint64_t p = 2;
  for (;;) {
    std::uint64_t next = p + 1;
    while (!is_prime_u64(next)) ++next;
    mpz_class candidate = out.value * to_mpz(next);
    if (candidate > x) return out;
    out.value = std::move(candidate);
    out.largest_prime = next;
    ++out.index;
    p = next;
  }
}

Primorial primorial_floor(double x) {
  if (!(x >= 2.0)) throw DomainError("primorial floor needs x >= 2");
  if (!std::isfinite(x)) throw DomainError("primorial floor needs a finite x");
  return primorial_floor(mpz_class(std::floor(x)));
}

}  // namespace pdc
