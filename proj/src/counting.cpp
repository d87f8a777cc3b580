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

#include "pdc/counting.hpp"

#include <algorithm>
#include <string>

#include "pdc/error.hpp"
#include "pdc/simd/kernels.hpp"

namespace pdc {
namespace {

void require_within(const PrimeTable& table, std::uint64_t x) {
  if (x > table.bound())
    throw RangeError("x = " + std::to_string(x) + " exceeds table bound " +
                     std::to_string(table.bound()));
}

// Odd p contribute only when every difference is even; p = 2 only when every
// difference is odd. Mixed-parity sets count zero.
bool all_even(const DifferenceSet& d) {
  return std::all_of(d.elements().begin(), d.elements().end(),
                     [](std::uint64_t v) { return v % 2 == 0; });
}

}  // namespace

GapHistogram gap_histogram(const PrimeTable& table, std::uint64_t x) {
  require_within(table, x);
  if (x < 3)
    throw InsufficientPrimesError("gap histogram needs at least two primes (x >= 3), got x = " +
                                  std::to_string(x));
  GapHistogram h;
  h.x = x;
  std::uint64_t prev = 0;
  table.for_each_prime(2, x, [&](std::uint64_t p) {
    if (prev != 0) ++h.counts[p - prev];
    prev = p;
  });
  for (const auto& [gap, n] : h.counts) {
    if (n > h.max_count) {
      h.max_count = n;
      h.argmax.clear();
    }
    if (n == h.max_count) h.argmax.push_back(gap);
  }
  return h;
}

PairHistogram pair_difference_histogram(const PrimeTable& table, std::uint64_t x,
                                        std::uint64_t d_max, Parallelism par) {
  require_within(table, x);
  if (d_max < 1 || d_max > x)
    throw RangeError("d_max must lie in [1, x], got " + std::to_string(d_max));

  PairHistogram h;
  h.x = x;
  h.d_max = d_max;
  h.counts.assign(d_max + 1, 0);

  // Odd d: only p = 2 can pair with an odd prime p + d.
  for (std::uint64_t d = 1; d <= d_max; d += 2)
    h.counts[d] = (d + 2 <= x && table.is_prime(d + 2)) ? 1 : 0;

  const auto bits = table.odd_bits();
  const std::uint64_t n_even = d_max / 2;
  constexpr std::uint64_t kChunk = 64;
  const std::uint64_t n_chunks = (n_even + kChunk - 1) / kChunk;
  // Each task writes a disjoint range of counts.
  parallel_for(n_chunks, par, [&](std::size_t chunk, unsigned) {
    const std::uint64_t first = chunk * kChunk + 1;
    const std::uint64_t last = std::min(n_even, first + kChunk - 1);
    for (std::uint64_t s = first; s <= last; ++s) {
      const std::uint64_t d = 2 * s;
      if (d + 3 > x) break;  // smallest odd pair is (3, 3 + d)
      const std::uint64_t n_bits = odd_positions_upto(x - d);
      h.counts[d] = simd::and_shifted_popcount(bits, bits, s, n_bits);
    }
  });
  return h;
}

TupleCount count_tuple(const PrimeTable& table, std::uint64_t x, const DifferenceSet& d) {
  require_within(table, x);
  if (d.largest() >= x) return {0, true};
  const std::uint64_t limit = x - d.largest();

  std::uint64_t count = 0;
  if (limit >= 2 && std::all_of(d.elements().begin(), d.elements().end(),
                                [&](std::uint64_t v) { return table.is_prime(2 + v); }))
    ++count;

  if (limit >= 3 && all_even(d)) {
    const auto bits = table.odd_bits();
    const std::uint64_t n_bits = odd_positions_upto(limit);
    if (d.k() == 1) {
      count += simd::and_shifted_popcount(bits, bits, d[0] / 2, n_bits);
    } else {
      const std::size_t n_words = (n_bits + 63) / 64;
      std::vector<std::uint64_t> running(n_words);
      simd::and_shifted(running, bits.first(n_words), bits, d[0] / 2);
      for (std::size_t i = 1; i + 1 < d.k(); ++i)
        simd::and_shifted(running, running, bits, d[i] / 2);
      count += simd::and_shifted_popcount(running, bits, d.largest() / 2, n_bits);
    }
  }
  return {count, false};
}

TupleCount count_tuple_oracle(const PrimeTable& table, std::uint64_t x, const DifferenceSet& d) {
  require_within(table, x);
  if (d.largest() >= x) return {0, true};
  std::uint64_t count = 0;
  for (const std::uint64_t p : table.primes(x - d.largest())) {
    bool all_prime = true;
    for (const std::uint64_t v : d.elements())
      if (!table.is_prime(p + v)) all_prime = false;
    if (all_prime) ++count;
  }
  return {count, false};
}

}  // namespace pdc
