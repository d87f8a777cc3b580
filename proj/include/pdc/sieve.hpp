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

// Prime membership table over [2, x] with odd-only bit storage.
//
// Bit i of the table represents the odd number 2i + 1, so bit 0 (the
// number 1) is always clear and 2 is handled out of band. The odd-only
// layout makes "n + d is prime" for even d a shift by d / 2 bits, which is
// what the counting kernels exploit.

#include <bit>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "pdc/parallel.hpp"

namespace pdc {

struct SieveOptions {
  std::size_t segment_bytes = 32 * 1024;
  Parallelism parallelism{};
  std::uint64_t memory_budget_bytes = std::uint64_t{1} << 30;
};

// Largest bound build_table accepts regardless of memory budget.
inline constexpr std::uint64_t kMaxSieveBound = std::uint64_t{1} << 36;

class PrimeTable {
 public:
  PrimeTable() = default;

  std::uint64_t bound() const { return bound_; }
  // pi(bound).
  std::uint64_t count() const { return count_; }

  bool is_prime(std::uint64_t n) const {
    if (n < 2 || n > bound_) return false;
    if (n % 2 == 0) return n == 2;
    const std::uint64_t i = n / 2;
    return (bits_[i / 64] >> (i % 64)) & 1;
  }

  // Number of primes <= n. Throws RangeError when n > bound().
  std::uint64_t pi(std::uint64_t n) const;

  // Odd-only membership words: bit i is set iff 2i + 1 is prime.
  std::span<const std::uint64_t> odd_bits() const { return bits_; }
  // Number of meaningful bits: the odd numbers in [1, bound].
  std::uint64_t odd_bit_count() const { return (bound_ + 1) / 2; }

  // Calls f(p) for each prime lo <= p <= hi (hi clamped to bound) in order.
  template <class F>
  void for_each_prime(std::uint64_t lo, std::uint64_t hi, F&& f) const {
    if (hi > bound_) hi = bound_;
    if (lo <= 2 && hi >= 2) f(std::uint64_t{2});
    if (hi < 3) return;
    const std::uint64_t first = lo <= 3 ? 1 : lo / 2;
    const std::uint64_t last = (hi - 1) / 2;
    for (std::uint64_t w = first / 64; w <= last / 64; ++w) {
      std::uint64_t word = bits_[w];
      if (w == first / 64) word &= ~std::uint64_t{0} << (first % 64);
      if (w == last / 64 && last % 64 != 63) word &= (std::uint64_t{2} << (last % 64)) - 1;
      while (word != 0) {
        const unsigned b = static_cast<unsigned>(std::countr_zero(word));
        f(2 * (w * 64 + b) + 1);
        word &= word - 1;
      }
    }
  }

  std::vector<std::uint64_t> primes(std::uint64_t hi) const;

  // Assembles a table from raw odd-only words (used by the cache loader);
  // validates the layout and recomputes pi.
  static PrimeTable from_odd_bits(std::uint64_t bound, std::vector<std::uint64_t> words);

  friend bool operator==(const PrimeTable& a, const PrimeTable& b) {
    return a.bound_ == b.bound_ && a.bits_ == b.bits_;
  }

 private:
  friend PrimeTable build_table(std::uint64_t x, const SieveOptions& options);

  void finalize();

  std::uint64_t bound_ = 0;
  std::uint64_t count_ = 0;
  std::vector<std::uint64_t> bits_;
  // rank_[j] = set bits in words [0, 8j).
  std::vector<std::uint64_t> rank_;
};

// Segmented sieve of Eratosthenes over [2, x]. Deterministic: the result is
// independent of segment size and thread count.
PrimeTable build_table(std::uint64_t x, const SieveOptions& options = {});

// Number of primes p <= x with p = a (mod q). a is reduced mod q first.
std::uint64_t prime_count_in_class(const PrimeTable& table, std::uint64_t x, std::uint64_t q,
                                   std::int64_t a);

// counts[a] = pi(x; q, a) for every 0 <= a < q, in one streaming pass.
std::vector<std::uint64_t> class_counts(const PrimeTable& table, std::uint64_t x,
                                        std::uint64_t q);

// Sieve cache file: "PDCS", version 0x01, u64 LE bound, odd-only bits
// packed LSB-first (bit 0 of byte 0 is the number 1).
void save_table(const PrimeTable& table, const std::filesystem::path& path);
// Validates magic, version, size and layout. When expected_count is set,
// the recomputed pi(bound) must match it.
PrimeTable load_table(const std::filesystem::path& path,
                      std::optional<std::uint64_t> expected_count = std::nullopt);

}  // namespace pdc

namespace pdc {

// Process-wide table with bound >= at_least, grown on demand. Safe to call
// concurrently; returned tables are immutable.
std::shared_ptr<const PrimeTable> shared_prime_table(std::uint64_t at_least);

}  // namespace pdc
