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

// Exact prime-pattern counts:
//   N(x, d)     consecutive primes p_n < p_{n+1} <= x with gap d
//   G_k(x, D)   primes p <= x - d_k with p + d_i prime for every d_i in D
//
// All counts are exact integers. The bulk paths run on the odd-only bitset
// kernels; count_tuple_oracle is a literal loop kept only as a test oracle.

#include <cstdint>
#include <map>
#include <vector>

#include "pdc/difference_set.hpp"
#include "pdc/parallel.hpp"
#include "pdc/sieve.hpp"

namespace pdc {

struct GapHistogram {
  std::uint64_t x = 0;
  std::map<std::uint64_t, std::uint64_t> counts;  // gap -> N(x, gap)
  std::uint64_t max_count = 0;
  std::vector<std::uint64_t> argmax;  // ascending
};

// Throws InsufficientPrimesError when x < 3, RangeError when x > bound.
GapHistogram gap_histogram(const PrimeTable& table, std::uint64_t x);

struct PairHistogram {
  std::uint64_t x = 0;
  std::uint64_t d_max = 0;
  std::vector<std::uint64_t> counts;  // counts[d] = G_1(x, {d}); counts[0] unused

  std::uint64_t operator[](std::uint64_t d) const { return counts.at(d); }
};

// G_1(x, {d}) for every 1 <= d <= d_max in one pass of shifted AND/popcount.
PairHistogram pair_difference_histogram(const PrimeTable& table, std::uint64_t x,
                                        std::uint64_t d_max, Parallelism par = {});

struct TupleCount {
  std::uint64_t count = 0;
  // d_k >= x: nothing to count, reported as zero rather than an error.
  bool degenerate = false;

  friend bool operator==(const TupleCount&, const TupleCount&) = default;
};

TupleCount count_tuple(const PrimeTable& table, std::uint64_t x, const DifferenceSet& d);

// Literal per-prime membership loop. Never optimize this.
TupleCount count_tuple_oracle(const PrimeTable& table, std::uint64_t x, const DifferenceSet& d);

// Number of odd-bit positions i (odd numbers 2i + 1) with 2i + 1 <= limit.
inline std::uint64_t odd_positions_upto(std::uint64_t limit) {
  return limit == 0 ? 0 : (limit - 1) / 2 + 1;
}

}  // namespace pdc
