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

#include <doctest.h>

#include <cmath>

#include "pdc/counting.hpp"
#include "pdc/error.hpp"
#include "pdc/moments.hpp"
#include "support.hpp"

using namespace pdc;

namespace {

// Ordered j-tuples of distinct primes <= x in a common class mod q, by loops.
std::uint64_t tuples_by_hand(std::uint64_t x, std::uint64_t q, unsigned j) {
  const auto ps = test::trial_primes(x);
  std::uint64_t c = 0;
  const std::size_t n = ps.size();
  if (j == 1) return n;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (b == a || ps[a] % q != ps[b] % q) continue;
      if (j == 2) {
        ++c;
        continue;
      }
      for (std::size_t e = 0; e < n; ++e)
        if (e != a && e != b && ps[e] % q == ps[a] % q) ++c;
    }
  return c;
}

// Set partitions of m labelled slots into j blocks, by restricted growth strings.
std::uint64_t partitions_by_hand(unsigned m, unsigned j) {
  std::uint64_t count = 0;
  std::vector<unsigned> g(m, 0);
  while (true) {
    unsigned blocks = 0;
    for (const auto v : g) blocks = std::max(blocks, v + 1);
    if (m == 0 || blocks == j) ++count;
    if (m == 0) break;
    // Next restricted growth string.
    int i = static_cast<int>(m) - 1;
    for (; i > 0; --i) {
      unsigned mx = 0;
      for (int t = 0; t < i; ++t) mx = std::max(mx, g[t]);
      if (g[i] <= mx) {
        ++g[i];
        for (unsigned t = i + 1; t < m; ++t) g[t] = 0;
        break;
      }
    }
    if (i == 0) break;
  }
  return count;
}

}  // namespace

TEST_SUITE("moments") {
  TEST_CASE("moment sums") {
    const auto t = build_table(1000);
    CHECK(moment_sum(t, 20, 3, 2, ClassSet::all) == 26);
    CHECK(moment_sum(t, 20, 1, 3, ClassSet::all) == 512);
    CHECK(moment_sum(t, 20, 3, 1, ClassSet::all) == 8);
    CHECK(moment_sum(t, 20, 3, 2, ClassSet::coprime) == 25);
    CHECK_THROWS_AS(moment_sum(t, 20, 3, 0, ClassSet::coprime), DomainError);
    CHECK_THROWS_AS(moment_sum(t, 1001, 3, 2, ClassSet::all), RangeError);
  }

  TEST_CASE("non-coprime classes add at most the primes dividing q (property)") {
    const auto& t = test::table_1e6();
    for (int trial = 0; trial < 60; ++trial) {
      const std::uint64_t x = test::uniform(2, 100000), q = test::uniform(1, 300);
      const unsigned k = static_cast<unsigned>(test::uniform(1, 4));
      const mpz_class diff = moment_sum(t, x, q, k, ClassSet::all) - moment_sum(t, x, q, k, ClassSet::coprime);
      std::uint64_t omega = 0;
      for (std::uint64_t p = 2; p <= q; ++p)
        if (q % p == 0 && test::trial_prime(p)) ++omega;
      CHECK(diff >= 0);
      CHECK(diff <= omega);
    }
  }

  TEST_CASE("stirling coefficients") {
    CHECK(stirling_coefficient(3, 1) == 3);
    CHECK(stirling_coefficient(4, 2) == 7);
    for (unsigned m = 1; m <= 20; ++m) {
      CHECK(stirling_coefficient(m, 0) == 1);
      CHECK(stirling_coefficient(m, m - 1) == 1);
      if (m >= 2) CHECK(stirling_coefficient(m, 1) == m * (m - 1) / 2);
      CHECK_THROWS_AS(stirling_coefficient(m, m), DomainError);
    }
    for (unsigned m = 1; m <= 12; ++m)
      for (unsigned j = 1; j <= m; ++j)
        CHECK(stirling2(m, j) == j * stirling2(m - 1, j) + stirling2(m - 1, j - 1));
    for (unsigned m = 1; m <= 9; ++m)
      for (unsigned j = 1; j <= m; ++j) CHECK(stirling2(m, j) == partitions_by_hand(m, j));
    CHECK(stirling2(0, 0) == 1);
    CHECK(stirling2(5, 0) == 0);
  }

  TEST_CASE("distinct tuple sums") {
    const auto t = build_table(1000);
    CHECK(distinct_tuple_sum(t, 20, 3, 2) == 18);
    CHECK(distinct_tuple_sum(t, 20, 3, 1) == 8);
    CHECK(distinct_tuple_sum(t, 10, 2, 2) == 6);
    for (const std::uint64_t x : {2u, 10u, 20u, 57u, 100u})
      for (const std::uint64_t q : {1u, 2u, 3u, 4u, 6u, 7u})
        for (unsigned j = 1; j <= 3; ++j) {
          const auto want = tuples_by_hand(x, q, j);
          CHECK(distinct_tuple_sum(t, x, q, j) == want);
          CHECK(distinct_tuple_sum_enumerated(t, x, q, j) == want);
        }
  }

  TEST_CASE("power identity") {
    const auto t = build_table(100000);
    auto r = verify_power_identity(t, 20, 3, 2);
    CHECK(r.ok);
    CHECK(r.lhs == 26);
    CHECK(r.residual == 0);
    r = verify_power_identity(t, 20, 1, 2);
    CHECK(r.lhs == 64);
    CHECK(r.ok);
    r = verify_power_identity(t, 10, 2, 3);
    CHECK(r.lhs == 28);
    CHECK(r.ok);
    for (int trial = 0; trial < 80; ++trial) {
      const std::uint64_t x = test::uniform(2, 10000), q = test::uniform(1, 50);
      const unsigned m = static_cast<unsigned>(test::uniform(1, 5));
      CHECK(verify_power_identity(t, x, q, m).residual == 0);
    }
    CHECK_THROWS_AS(verify_power_identity(t, 20, 3, 6), RangeError);
  }

  TEST_CASE("tuple link") {
    const auto t = build_table(10000);
    auto r = verify_tuple_link(t, 20, 3, 2);
    CHECK(r.ok);
    CHECK(r.lhs == 18);
    r = verify_tuple_link(t, 10, 2, 2);
    CHECK(r.lhs == 6);
    CHECK(r.rhs == 6);
    r = verify_tuple_link(t, 7, 1, 2);
    CHECK(r.lhs == 12);
    CHECK(r.ok);
    // RHS recomputed here from count_tuple_oracle.
    for (const std::uint64_t x : {30u, 100u}) {
      for (const std::uint64_t q : {1u, 2u, 6u}) {
        std::uint64_t rhs = 0;
        for (std::uint64_t d1 = q; d1 < x; d1 += q)
          for (std::uint64_t d2 = d1 + q; d2 < x; d2 += q)
            rhs += count_tuple_oracle(t, x, DifferenceSet{d1, d2}).count;
        const auto link = verify_tuple_link(t, x, q, 3);
        CHECK(link.rhs == 6 * rhs);
        CHECK(link.lhs == tuples_by_hand(x, q, 3));
        CHECK(link.ok);
      }
    }
    for (std::uint64_t q = 1; q <= 30; q += 7)
      for (const unsigned k : {2u, 3u}) CHECK(verify_tuple_link(t, 1000, q, k).ok);
    CHECK_THROWS_AS(verify_tuple_link(t, 20, 3, 4), RangeError);
  }

  TEST_CASE("moment inequality report") {
    const auto t = build_table(10000);
    const auto r = verify_moment_inequality(t, 10000, 30, 2);
    // Margin recomputed from class counts: sum pi^2 - (pi(x)/phi(q)) sum pi.
    const auto c = class_counts(t, 10000, 30);
    long double s1 = 0, s2 = 0;
    for (const auto v : c) {
      s1 += v;
      s2 += static_cast<long double>(v) * v;
    }
    CHECK(static_cast<double>(r.margin_all) == doctest::Approx(static_cast<double>(s2 - 1229.0L / 8 * s1)));
    CHECK(r.budget == doctest::Approx(1229.0 / 8 * std::log(30.0)));
    CHECK(r.within_budget == (r.margin_all >= -r.budget));
    CHECK(r.q_in_range);
    const auto one = verify_moment_inequality(t, 10000, 1, 2);
    CHECK(one.margin_coprime == 0);
    CHECK(one.margin_all == 0);
    const auto big = verify_moment_inequality(t, 10000, 210, 3);
    CHECK(!big.q_in_range);
    CHECK(std::isfinite(static_cast<double>(big.margin_all)));
    CHECK_THROWS_AS(verify_moment_inequality(t, 10000, 30, 1), DomainError);
  }

  TEST_CASE("moment report") {
    const auto t = build_table(100000);
    const auto r = moment_report(t, 10000, 30, 3);
    CHECK(r.pi_x == 1229);
    CHECK(r.phi_q == 8);
    REQUIRE(r.coprime_moments.size() == 4);
    CHECK(r.coprime_moments[0] == 8);
    CHECK(r.coprime_moments[1] == 1229 - 3);
    CHECK(r.distinct_sums.size() == 3);
    CHECK(r.identity_ok);
    CHECK(r.identity_residual == 0);
    CHECK(r.cauchy_schwarz_ok);
    CHECK(r.full_sum - r.coprime_moments[3] == 3);
    for (int trial = 0; trial < 30; ++trial) {
      const auto m = moment_report(t, test::uniform(2, 100000), test::uniform(1, 100), 2);
      CHECK(m.coprime_moments[2] * m.coprime_moments[0] >=
            m.coprime_moments[1] * m.coprime_moments[1]);
    }
  }

  TEST_CASE("euler phi") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(30) == 8);
    CHECK(euler_phi(210) == 48);
    CHECK(euler_phi(97) == 96);
    CHECK(euler_phi(64) == 32);
  }
}
