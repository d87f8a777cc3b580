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

#include "pdc/sieve.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <mutex>
#include <string>

#include "pdc/error.hpp"
#include "pdc/simd/kernels.hpp"

namespace pdc {
namespace {

constexpr std::size_t kRankStride = 8;  // words per rank entry

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Odd primes <= limit by a plain sieve; limit is at most sqrt(kMaxSieveBound).
std::vector<std::uint64_t> small_odd_primes(std::uint64_t limit) {
  std::vector<char> composite(limit + 1, 0);
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 3; n <= limit; n += 2) {
    if (composite[n]) continue;
    out.push_back(n);
    for (std::uint64_t m = n * n; m <= limit; m += 2 * n) composite[m] = 1;
  }
  return out;
}

std::uint64_t table_bytes(std::uint64_t x) {
  const std::uint64_t words = ((x + 1) / 2 + 63) / 64;
  const std::uint64_t ranks = words / kRankStride + 1;
  return (words + ranks) * sizeof(std::uint64_t);
}

}  // namespace

std::uint64_t PrimeTable::pi(std::uint64_t n) const {
  if (n > bound_)
    throw RangeError("pi(" + std::to_string(n) + ") exceeds table bound " +
                     std::to_string(bound_));
  if (n < 2) return 0;
  if (n == bound_) return count_;
  // Odd bits with index <= (n - 1) / 2, plus the prime 2.
  const std::uint64_t n_bits = (n - 1) / 2 + 1;
  const std::uint64_t full = n_bits / 64;
  const std::uint64_t block = full / kRankStride;
  std::uint64_t total = rank_[block];
  for (std::uint64_t w = block * kRankStride; w < full; ++w) total += std::popcount(bits_[w]);
  if (const unsigned rem = n_bits % 64; rem != 0)
    total += std::popcount(bits_[full] & ((std::uint64_t{1} << rem) - 1));
  return total + 1;
}

std::vector<std::uint64_t> PrimeTable::primes(std::uint64_t hi) const {
  std::vector<std::uint64_t> out;
  if (hi >= 2) out.reserve(pi(std::min(hi, bound_)));
  for_each_prime(2, hi, [&](std::uint64_t p) { out.push_back(p); });
  return out;
}

void PrimeTable::finalize() {
  rank_.assign(bits_.size() / kRankStride + 1, 0);
  std::uint64_t running = 0;
  for (std::size_t j = 0; j < rank_.size(); ++j) {
    rank_[j] = running;
    const std::size_t begin = j * kRankStride;
    const std::size_t end = std::min(bits_.size(), begin + kRankStride);
    if (begin < end) running += simd::active().popcount(bits_.data() + begin, end - begin);
  }
  count_ = running + (bound_ >= 2 ? 1 : 0);
}

PrimeTable PrimeTable::from_odd_bits(std::uint64_t bound, std::vector<std::uint64_t> words) {
  if (bound < 2) throw FormatError("sieve bound below 2");
  const std::uint64_t n_bits = (bound + 1) / 2;
  if (words.size() != (n_bits + 63) / 64)
    throw FormatError("sieve word count does not match bound " + std::to_string(bound));
  if (words[0] & 1) throw FormatError("sieve marks 1 as prime");
  if (const unsigned rem = n_bits % 64; rem != 0 && (words.back() >> rem) != 0)
    throw FormatError("sieve has bits set beyond its bound");
  PrimeTable table;
  table.bound_ = bound;
  table.bits_ = std::move(words);
  table.finalize();
  return table;
}

PrimeTable build_table(std::uint64_t x, const SieveOptions& options) {
  if (x < 2) throw RangeError("sieve bound must be at least 2, got " + std::to_string(x));
  if (x > kMaxSieveBound)
    throw RangeError("sieve bound " + std::to_string(x) + " exceeds implementation ceiling " +
                     std::to_string(kMaxSieveBound));
  if (const std::uint64_t need = table_bytes(x); need > options.memory_budget_bytes)
    throw ResourceError("sieve up to " + std::to_string(x) + " needs " + std::to_string(need) +
                        " bytes, over the memory budget of " +
                        std::to_string(options.memory_budget_bytes) + " bytes");

  PrimeTable table;
  table.bound_ = x;
  const std::uint64_t n_bits = (x + 1) / 2;
  table.bits_.assign((n_bits + 63) / 64, ~std::uint64_t{0});
  table.bits_[0] &= ~std::uint64_t{1};  // 1 is not prime
  if (const unsigned rem = n_bits % 64; rem != 0)
    table.bits_.back() &= (std::uint64_t{1} << rem) - 1;

  const std::vector<std::uint64_t> base = small_odd_primes(isqrt(x));
  const std::size_t seg_words = std::max<std::size_t>(1, options.segment_bytes / 8);
  const std::size_t n_segments = (table.bits_.size() + seg_words - 1) / seg_words;
  std::uint64_t* words = table.bits_.data();

  // Segments own disjoint word ranges, so workers never share a word.
  parallel_for(n_segments, options.parallelism, [&](std::size_t seg, unsigned) {
    const std::uint64_t lo = seg * seg_words * 64;  // first bit index
    const std::uint64_t hi = std::min<std::uint64_t>(n_bits, (seg + 1) * seg_words * 64);
    for (const std::uint64_t p : base) {
      // Odd multiples of p from p*p on; index of odd m is m / 2, step p.
      std::uint64_t j = (p * p) / 2;
      if (j >= hi) break;
      if (j < lo) j += (lo - j + p - 1) / p * p;
      for (; j < hi; j += p) words[j / 64] &= ~(std::uint64_t{1} << (j % 64));
    }
  });

  table.finalize();
  return table;
}

std::vector<std::uint64_t> class_counts(const PrimeTable& table, std::uint64_t x,
                                        std::uint64_t q) {
  if (q == 0) throw DomainError("modulus q must be positive");
  if (x > table.bound())
    throw RangeError("x = " + std::to_string(x) + " exceeds table bound " +
                     std::to_string(table.bound()));
  std::vector<std::uint64_t> counts(q, 0);
  if (q == 1) {
    counts[0] = x >= 2 ? table.pi(x) : 0;
    return counts;
  }
  table.for_each_prime(2, x, [&](std::uint64_t p) { ++counts[p % q]; });
  return counts;
}

std::uint64_t prime_count_in_class(const PrimeTable& table, std::uint64_t x, std::uint64_t q,
                                   std::int64_t a) {
  if (q == 0) throw DomainError("modulus q must be positive");
  if (x > table.bound())
    throw RangeError("x = " + std::to_string(x) + " exceeds table bound " +
                     std::to_string(table.bound()));
  const auto sq = static_cast<std::int64_t>(q);
  const auto residue = static_cast<std::uint64_t>(((a % sq) + sq) % sq);
  if (q == 1) return x >= 2 ? table.pi(x) : 0;
  std::uint64_t count = 0;
  table.for_each_prime(2, x, [&](std::uint64_t p) { count += (p % q == residue); });
  return count;
}

}  // namespace pdc

namespace pdc {

std::shared_ptr<const PrimeTable> shared_prime_table(std::uint64_t at_least) {
  static std::mutex mutex;
  static std::shared_ptr<const PrimeTable> current;
  std::lock_guard lock(mutex);
  if (!current || current->bound() < at_least) {
    const std::uint64_t grown = current ? current->bound() * 2 : 0;
    const std::uint64_t bound = std::max<std::uint64_t>({at_least, grown, 1 << 16});
    current = std::make_shared<const PrimeTable>(build_table(bound));
  }
  return current;
}

}  // namespace pdc
