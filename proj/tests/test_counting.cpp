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
#include "pdc/singular.hpp"
#include "support.hpp"

using namespace pdc;

namespace {

// Naive double loop over a plain list of primes.
std::uint64_t pair_oracle(const std::vector<std::uint64_t>& primes, std::uint64_t x,
                          std::uint64_t d) {
  std::uint64_t c = 0;
  for (const auto p : primes)
    for (const auto q : primes)
      if (q <= x && p + d == q) ++c;
  return c;
}

DifferenceSet random_set(unsigned k, std::uint64_t d_max) {
  std::vector<std::uint64_t> v;
  while (v.size() < k) {
    const auto d = test::uniform(1, d_max);
    if (std::find(v.begin(), v.end(), d) == v.end()) v.push_back(d);
  }
  return DifferenceSet(v);
}

}  // namespace

TEST_SUITE("counting") {
  TEST_CASE("difference set basics") {
    const DifferenceSet d{12, 6, 18};
    CHECK(d.elements()[0] == 6);
    CHECK(d.k() == 3);
    CHECK(d.gcd() == 6);
    CHECK(d.reduced() == std::vector<std::uint64_t>{1, 2, 3});
    // {0,6,12,18}: 6*12*18*6*12*6
    CHECK(d.delta() == 6 * 12 * 18 * 6 * 12 * 6);
    CHECK(DifferenceSet{1}.delta() == 1);
    CHECK(d.to_string() == "6 12 18");
    CHECK(d.to_string(',') == "6,12,18");
    CHECK_THROWS_AS(DifferenceSet(std::vector<std::uint64_t>{}), DomainError);
    CHECK_THROWS_AS((DifferenceSet{0, 2}), DomainError);
    CHECK_THROWS_AS((DifferenceSet{2, 2}), DomainError);
    CHECK(parse_integer_list("0, 2;6 8") == std::vector<std::int64_t>{0, 2, 6, 8});
    CHECK_THROWS_AS(parse_integer_list("2,x"), DomainError);
  }

  TEST_CASE("difference set invariants (property)") {
    for (int trial = 0; trial < 200; ++trial) {
      const auto d = random_set(static_cast<unsigned>(test::uniform(1, 5)), 200);
      const auto r = d.reduced();
      std::uint64_t g = 0;
      for (std::size_t i = 0; i < d.k(); ++i) {
        CHECK(d.gcd() * r[i] == d[i]);
        g = std::gcd(g, r[i]);
        if (i) CHECK(d[i - 1] < d[i]);
      }
      CHECK(g == 1);
      mpz_class prod = 1;
      std::vector<std::uint64_t> all = {0};
      all.insert(all.end(), d.elements().begin(), d.elements().end());
      for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) prod *= static_cast<unsigned long>(all[i] - all[j]);
      CHECK(d.delta() == prod);
    }
  }

  TEST_CASE("gap histogram examples") {
    const auto t = build_table(100);
    auto h = gap_histogram(t, 20);
    CHECK(h.counts == std::map<std::uint64_t, std::uint64_t>{{1, 1}, {2, 4}, {4, 2}});
    CHECK(h.max_count == 4);
    CHECK(h.argmax == std::vector<std::uint64_t>{2});
    CHECK(gap_histogram(t, 3).counts == std::map<std::uint64_t, std::uint64_t>{{1, 1}});
    h = gap_histogram(t, 7);
    CHECK(h.counts == std::map<std::uint64_t, std::uint64_t>{{1, 1}, {2, 2}});
    CHECK(h.argmax == std::vector<std::uint64_t>{2});
    CHECK_THROWS_AS(gap_histogram(t, 2), InsufficientPrimesError);
    CHECK_THROWS_AS(gap_histogram(t, 101), RangeError);
  }

  TEST_CASE("gap histogram sums to pi(x) - 1") {
    const auto& t = test::table_1e6();
    for (const std::uint64_t x : {3u, 10u, 1000u, 99991u, 1000000u}) {
      const auto h = gap_histogram(t, x);
      std::uint64_t s = 0, best = 0;
      for (const auto& [d, c] : h.counts) {
        s += c;
        best = std::max(best, c);
      }
      CHECK(s == t.pi(x) - 1);
      CHECK(h.max_count == best);
    }
  }

  TEST_CASE("pair histogram examples and consistency") {
    const auto t = build_table(3000);
    CHECK(pair_difference_histogram(t, 20, 19)[2] == 4);
    CHECK(pair_difference_histogram(t, 10, 9)[5] == 1);
    CHECK(pair_difference_histogram(t, 20, 19)[19] == 0);
    const auto primes = test::trial_primes(3000);
    for (const std::uint64_t x : {2u, 3u, 50u, 127u, 128u, 129u, 1000u, 2999u}) {
      const std::uint64_t d_max = std::max<std::uint64_t>(1, x - 1);
      const auto h = pair_difference_histogram(t, x, d_max);
      for (std::uint64_t d = 1; d <= d_max; ++d) {
        REQUIRE(h[d] == pair_oracle(primes, x, d));
        REQUIRE(h[d] == count_tuple(t, x, DifferenceSet{d}).count);
      }
    }
  }

  TEST_CASE("pair histogram is schedule independent") {
    const auto& t = test::table_1e6();
    const auto a = pair_difference_histogram(t, 200000, 700, Parallelism{1});
    const auto b = pair_difference_histogram(t, 200000, 700, Parallelism{7});
    CHECK(a.counts == b.counts);
  }

  TEST_CASE("count_tuple examples") {
    const auto t = build_table(1000);
    CHECK(count_tuple(t, 20, {2, 6}).count == 2);
    CHECK(count_tuple(t, 20, {2}).count == 4);
    CHECK(count_tuple(t, 20, {1, 2}).count == 0);
    CHECK(count_tuple_oracle(t, 20, {2, 6}).count == 2);
    CHECK(count_tuple_oracle(t, 50, {6}).count == 9);
    CHECK(count_tuple(t, 5, {1}).count == 1);
    const auto deg = count_tuple(t, 20, {20});
    CHECK(deg.count == 0);
    CHECK(deg.degenerate);
    CHECK(count_tuple_oracle(t, 20, {25}).degenerate);
    CHECK_THROWS_AS(count_tuple(t, 1001, {2}), RangeError);
  }

  TEST_CASE("count_tuple equals the oracle (property)") {
    const auto& t = test::table_1e6();
    for (int trial = 0; trial < 400; ++trial) {
      const std::uint64_t x = test::uniform(2, 10000);
      const auto d = random_set(static_cast<unsigned>(test::uniform(1, 3)), 60);
      CAPTURE(x);
      CAPTURE(d.to_string());
      REQUIRE(count_tuple(t, x, d) == count_tuple_oracle(t, x, d));
    }
    // Odd and mixed-parity sets, large x.
    for (const auto& d : {DifferenceSet{1}, DifferenceSet{3, 5}, DifferenceSet{1, 2},
                          DifferenceSet{2}, DifferenceSet{2, 6, 8}, DifferenceSet{999999}})
      CHECK(count_tuple(t, 1000000, d) == count_tuple_oracle(t, 1000000, d));
  }

  TEST_CASE("monotone in x and bounded by subsets (property)") {
    const auto& t = test::table_1e6();
    for (int trial = 0; trial < 100; ++trial) {
      const auto d = random_set(static_cast<unsigned>(test::uniform(2, 4)), 100);
      std::uint64_t prev = 0;
      for (std::uint64_t x = 100; x <= 20000; x += test::uniform(1, 3000)) {
        const auto c = count_tuple(t, x, d).count;
        CHECK(c >= prev);
        prev = c;
        const std::size_t drop = test::uniform(0, d.k() - 1);
        std::vector<std::uint64_t> rest;
        for (std::size_t i = 0; i < d.k(); ++i)
          if (i != drop) rest.push_back(d[i]);
        CHECK(c <= count_tuple(t, x, DifferenceSet(rest)).count);
      }
    }
  }

  TEST_CASE("sieve upper bound holds empirically") {
    const auto& t = test::table_1e6();
    for (int trial = 0; trial < 40; ++trial) {
      const unsigned k = static_cast<unsigned>(test::uniform(1, 3));
      auto d = random_set(k, 60);
      const std::uint64_t x = test::uniform(20000, 1000000);
      const auto s = singular_series(with_zero(d), 1e-6);
      if (s.is_zero) continue;
      const double y = static_cast<double>(x - d.largest());
      double fact = 1;
      for (unsigned i = 2; i <= k + 1; ++i) fact *= i;
      const double bound = (std::pow(2.0, k + 1) * fact + 0.01) * static_cast<double>(s.value) * y /
                           std::pow(std::log(y), k + 1);
      CHECK(static_cast<double>(count_tuple(t, x, d).count) <= bound);
    }
  }

  TEST_CASE("odd_positions_upto") {
    CHECK(odd_positions_upto(0) == 0);
    CHECK(odd_positions_upto(1) == 1);
    CHECK(odd_positions_upto(2) == 1);
    CHECK(odd_positions_upto(9) == 5);
  }
}
