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

// Jumping champions (most common gap between consecutive primes) and k-tuple
// prime difference champions (sets D maximizing G_k(x, D) over all primes).
//
// Ties are never broken: every maximizing set is reported, sorted
// lexicographically. Runner-up lists are the next best sets with a positive
// count, ordered by (count desc, set asc).

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pdc/difference_set.hpp"
#include "pdc/parallel.hpp"
#include "pdc/sieve.hpp"

namespace pdc {

enum class SearchMode { exhaustive, pruned };

std::string_view mode_name(SearchMode mode);
SearchMode parse_mode(std::string_view name);

struct ExhaustiveLimits {
  std::uint64_t max_x_k2 = 100000;
  std::uint64_t max_x_k3 = 5000;
  std::uint64_t max_x_k4_plus = 1000;

  std::uint64_t for_k(unsigned k) const;
};

struct PdcOptions {
  SearchMode mode = SearchMode::exhaustive;
  std::size_t runners_up = 5;
  // Pruned family: D = d * D', d = m * p_n# with m <= multiplier_max,
  // D' a subset of {1..pattern_bound} with gcd 1 (0 means 12 k).
  unsigned multiplier_max = 30;
  unsigned pattern_bound = 0;
  ExhaustiveLimits limits{};
  Parallelism parallelism{};
};

struct RankedSet {
  DifferenceSet set;
  std::uint64_t count = 0;

  friend bool operator==(const RankedSet&, const RankedSet&) = default;
};

struct ChampionRecord {
  std::uint64_t x = 0;
  unsigned k = 0;
  std::vector<DifferenceSet> winners;
  std::uint64_t max_count = 0;
  std::vector<RankedSet> runners_up;
  SearchMode mode = SearchMode::exhaustive;
  std::string search_space;
  // Every winner has d_k < x / 2.
  bool winners_below_half_x = false;

  friend bool operator==(const ChampionRecord&, const ChampionRecord&) = default;
};

// Most common gap between consecutive primes <= x (x >= 3).
ChampionRecord jumping_champion(const PrimeTable& table, std::uint64_t x,
                                std::size_t runners_up = 5);

// k-tuple prime difference champion for primes <= x. k = 1 is always
// exhaustive. Throws InsufficientPrimesError when pi(x) < k + 1 and
// RangeError when an exhaustive search exceeds options.limits.
ChampionRecord find_pdc(const PrimeTable& table, std::uint64_t x, unsigned k,
                        const PdcOptions& options = {});

// One record per grid point; the grid must be strictly ascending.
std::vector<ChampionRecord> champion_scan(const PrimeTable& table,
                                          const std::vector<std::uint64_t>& x_grid, unsigned k,
                                          const PdcOptions& options = {});

}  // namespace pdc
