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

#include <algorithm>
#include <map>
#include <numeric>

#include "pdc/champions.hpp"
#include "pdc/counting.hpp"
#include "pdc/error.hpp"
#include "pdc/singular.hpp"
#include "support.hpp"

using namespace pdc;

namespace {

using Counts = std::map<std::vector<std::uint64_t>, std::uint64_t>;

// G_k(x, D) for every D with d_k < x, from tuples of primes p < q_1 < ... < q_k <= x.
Counts brute_counts(std::uint64_t x, unsigned k) {
  const auto ps = test::trial_primes(x);
  Counts counts;
  std::vector<std::size_t> idx(k + 1);
  const std::size_t n = ps.size();
  if (n < k + 1) return counts;
  // Enumerate increasing index tuples.
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    std::vector<std::uint64_t> d;
    for (unsigned i = 1; i <= k; ++i) d.push_back(ps[idx[i]] - ps[idx[0]]);
    ++counts[d];
    int i = static_cast<int>(k);
    while (i >= 0 && idx[i] == n - 1 - (k - i)) --i;
    if (i < 0) break;
    ++idx[i];
    for (unsigned j = i + 1; j <= k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return counts;
}

struct Expected {
  std::uint64_t max = 0;
  std::vector<std::vector<std::uint64_t>> winners;
  std::vector<std::pair<std::vector<std::uint64_t>, std::uint64_t>> runners;
};

Expected expected_from(const Counts& counts, std::size_t n_runners) {
  Expected e;
  for (const auto& [d, c] : counts) e.max = std::max(e.max, c);
  std::vector<std::pair<std::vector<std::uint64_t>, std::uint64_t>> rest;
  for (const auto& [d, c] : counts) {
    if (c == e.max) e.winners.push_back(d);
    else rest.emplace_back(d, c);
  }
  std::stable_sort(rest.begin(), rest.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  if (rest.size() > n_runners) rest.resize(n_runners);
  e.runners = rest;
  return e;
}

std::vector<std::uint64_t> elems(const DifferenceSet& d) { return {d.elements().begin(), d.elements().end()}; }

void check_against_brute(const ChampionRecord& r, const Expected& e) {
  CHECK(r.max_count == e.max);
  REQUIRE(r.winners.size() == e.winners.size());
  for (std::size_t i = 0; i < e.winners.size(); ++i) CHECK(elems(r.winners[i]) == e.winners[i]);
  REQUIRE(r.runners_up.size() == e.runners.size());
  for (std::size_t i = 0; i < e.runners.size(); ++i) {
    CHECK(elems(r.runners_up[i].set) == e.runners[i].first);
    CHECK(r.runners_up[i].count == e.runners[i].second);
  }
}

}  // namespace

TEST_SUITE("champions") {
  TEST_CASE("jumping champions") {
    const auto t = build_table(1000);
    auto r = jumping_champion(t, 20);
    REQUIRE(r.winners.size() == 1);
    CHECK(r.winners[0] == DifferenceSet{2});
    CHECK(r.max_count == 4);
    r = jumping_champion(t, 7);
    CHECK(r.winners == std::vector<DifferenceSet>{DifferenceSet{2}});
    CHECK(r.max_count == 2);
    r = jumping_champion(t, 5);
    CHECK(r.winners == std::vector<DifferenceSet>{DifferenceSet{1}, DifferenceSet{2}});
    CHECK(r.max_count == 1);
    CHECK_THROWS_AS(jumping_champion(t, 2), InsufficientPrimesError);
    r = jumping_champion(t, 1000);
    CHECK(r.winners == std::vector<DifferenceSet>{DifferenceSet{6}});
    CHECK(r.max_count == gap_histogram(t, 1000).max_count);
  }

  TEST_CASE("k = 1 examples") {
    const auto t = build_table(1000);
    auto r = find_pdc(t, 50, 1);
    REQUIRE(r.winners.size() == 1);
    CHECK(r.winners[0] == DifferenceSet{6});
    CHECK(r.max_count == 9);
    CHECK(r.mode == SearchMode::exhaustive);
    r = find_pdc(t, 4, 1);
    CHECK(r.winners == std::vector<DifferenceSet>{DifferenceSet{1}});
    CHECK(r.max_count == 1);
    CHECK(r.runners_up.empty());
    CHECK_THROWS_AS(find_pdc(t, 2, 1), InsufficientPrimesError);
    CHECK_THROWS_AS(find_pdc(t, 5, 3), InsufficientPrimesError);
    CHECK_THROWS_AS(find_pdc(t, 1001, 1), RangeError);
  }

  TEST_CASE("k = 2 at x = 20") {
    const auto t = build_table(100);
    const auto r = find_pdc(t, 20, 2);
    CHECK(r.max_count >= 2);
    for (const auto& w : r.winners) CHECK(count_tuple_oracle(t, 20, w).count == r.max_count);
  }

  TEST_CASE("k = 1 exhaustive re-scan") {
    const auto t = build_table(100000);
    for (const std::uint64_t x : {3u, 5u, 11u, 50u, 97u, 128u, 1000u, 4099u}) {
      CAPTURE(x);
      check_against_brute(find_pdc(t, x, 1), expected_from(brute_counts(x, 1), 5));
    }
  }

  TEST_CASE("k = 1 champions at 10^3, 10^4, 10^5 against a naive pair loop") {
    const auto t = build_table(100000);
    for (const std::uint64_t x : {1000u, 10000u, 100000u}) {
      const auto ps = test::trial_primes(x);
      std::vector<std::uint64_t> c(x, 0);
      for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = i + 1; j < ps.size(); ++j) ++c[ps[j] - ps[i]];
      const auto best = std::max_element(c.begin(), c.end());
      const auto r = find_pdc(t, x, 1);
      REQUIRE(r.winners.size() == 1);
      CHECK(r.winners[0][0] == static_cast<std::uint64_t>(best - c.begin()));
      CHECK(r.max_count == *best);
      CHECK(r.winners_below_half_x);
    }
  }

  TEST_CASE("k = 2 and k = 3 exhaustive re-scan") {
    const auto t = build_table(3000);
    for (const std::uint64_t x : {5u, 7u, 20u, 101u, 500u, 2000u}) {
      CAPTURE(x);
      check_against_brute(find_pdc(t, x, 2), expected_from(brute_counts(x, 2), 5));
    }
    for (const std::uint64_t x : {7u, 30u, 200u}) {
      CAPTURE(x);
      check_against_brute(find_pdc(t, x, 3), expected_from(brute_counts(x, 3), 5));
    }
    PdcOptions wide;
    wide.runners_up = 40;
    check_against_brute(find_pdc(t, 300, 2, wide), expected_from(brute_counts(300, 2), 40));
    PdcOptions none;
    none.runners_up = 0;
    check_against_brute(find_pdc(t, 300, 2, none), expected_from(brute_counts(300, 2), 0));
  }

  TEST_CASE("winners are oracle-confirmed") {
    const auto t = build_table(3000);
    for (const unsigned k : {1u, 2u, 3u}) {
      const auto r = find_pdc(t, 1000, k);
      for (const auto& w : r.winners) CHECK(count_tuple_oracle(t, 1000, w).count == r.max_count);
      for (const auto& rs : r.runners_up) CHECK(count_tuple_oracle(t, 1000, rs.set).count == rs.count);
    }
  }

  TEST_CASE("schedule independence") {
    const auto t = build_table(5000);
    for (const unsigned k : {1u, 2u, 3u}) {
      PdcOptions one, many;
      one.parallelism.threads = 1;
      many.parallelism.threads = 8;
      CHECK(find_pdc(t, 2000, k, one) == find_pdc(t, 2000, k, many));
      one.mode = many.mode = SearchMode::pruned;
      CHECK(find_pdc(t, 5000, k, one) == find_pdc(t, 5000, k, many));
    }
  }

  TEST_CASE("exhaustive limits") {
    const auto t = build_table(10000);
    CHECK_THROWS_AS(find_pdc(t, 5001, 3), RangeError);
    PdcOptions raised;
    raised.limits.max_x_k3 = 6000;
    CHECK_NOTHROW(find_pdc(t, 5001, 3, raised));
    CHECK_THROWS_AS(find_pdc(t, 1001, 4), RangeError);
    CHECK(ExhaustiveLimits{}.for_k(1) == UINT64_MAX);
    CHECK(ExhaustiveLimits{}.for_k(2) == 100000);
  }

  TEST_CASE("pruned mode counts are exact and stay in the declared family") {
    const auto& t = test::table_1e6();
    for (const unsigned k : {2u, 3u, 4u}) {
      PdcOptions o;
      o.mode = SearchMode::pruned;
      o.runners_up = 6;
      const std::uint64_t x = k == 4 ? 30000 : 100000;
      const auto r = find_pdc(t, x, k, o);
      CHECK(r.mode == SearchMode::pruned);
      CHECK(!r.search_space.empty());
      REQUIRE(!r.winners.empty());
      std::vector<DifferenceSet> all = r.winners;
      for (const auto& rs : r.runners_up) {
        all.push_back(rs.set);
        CHECK(count_tuple_oracle(t, x, rs.set).count == rs.count);
      }
      for (const auto& w : r.winners) CHECK(count_tuple_oracle(t, x, w).count == r.max_count);
      for (const auto& d : all) {
        CHECK(d.k() == k);
        const auto red = d.reduced();
        CHECK(red.back() <= 12 * k);
        CHECK(!singular_series(with_zero(d), 1e-3).is_zero);
        // The multiplier is m * primorial with m <= 30.
        std::uint64_t g = d.gcd(), primorial = 1;
        for (const std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u})
          if (g % (primorial * p) == 0) primorial *= p;
          else break;
        CHECK(primorial >= 2);
        CHECK(g % primorial == 0);
        CHECK(g / primorial <= 30);
      }
    }
  }

  TEST_CASE("pruned mode agrees with exhaustive where the family contains the champion") {
    const auto t = build_table(5000);
    PdcOptions p;
    p.mode = SearchMode::pruned;
    const auto ex = find_pdc(t, 5000, 2);
    const auto pr = find_pdc(t, 5000, 2, p);
    CHECK(pr.max_count <= ex.max_count);
    // {6, 12}-type champions are inside the family.
    if (ex.winners.front().gcd() % 2 == 0 && ex.winners.front().reduced().back() <= 24)
      CHECK(pr.max_count == ex.max_count);
  }

  TEST_CASE("champion scan") {
    const auto t = build_table(10000);
    CHECK(champion_scan(t, {}, 1).empty());
    const auto one = champion_scan(t, {50}, 1);
    REQUIRE(one.size() == 1);
    CHECK(one[0] == find_pdc(t, 50, 1));
    const auto grid = champion_scan(t, {100, 1000, 10000}, 1);
    REQUIRE(grid.size() == 3);
    for (std::size_t i = 1; i < grid.size(); ++i)
      CHECK(grid[i].winners.front().gcd() >= grid[i - 1].winners.front().gcd());
    CHECK_THROWS_AS(champion_scan(t, {1000, 100}, 1), RangeError);
    CHECK_THROWS_AS(champion_scan(t, {100, 100}, 1), RangeError);
  }

  TEST_CASE("mode names") {
    CHECK(mode_name(SearchMode::pruned) == "pruned");
    CHECK(parse_mode("exhaustive") == SearchMode::exhaustive);
    CHECK_THROWS_AS(parse_mode("fast"), DomainError);
  }
}
