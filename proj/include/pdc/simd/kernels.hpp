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

// Bitset kernels behind every counting path.
//
// A bitset is a little-endian array of 64-bit words; bit i lives in
// word i / 64 at position i % 64. "b shifted by s" means the bitset whose
// bit i equals bit (i + s) of b, with bits past the end of b read as zero.
//
// Each kernel has a scalar reference implementation and optional vector
// variants. All variants must return bit-identical results; the active one
// is chosen once at runtime from CPU features (override with PDC_SIMD).

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace pdc::simd {

enum class Isa { scalar, avx2, avx512, neon };

std::string_view isa_name(Isa isa);

struct KernelTable {
  Isa isa;

  // Number of set bits in words[0, n_words).
  std::uint64_t (*popcount)(const std::uint64_t* words, std::size_t n_words);

  // Number of positions i < n_bits with a[i] set and b[i + shift] set.
  // a must hold at least ceil(n_bits / 64) words; b holds b_words words.
  std::uint64_t (*and_shifted_popcount)(const std::uint64_t* a, const std::uint64_t* b,
                                        std::size_t b_words, std::size_t shift,
                                        std::size_t n_bits);

  // out[w] = a[w] & (b shifted by shift)[w] for w < n_words.
  // out may alias a but not b.
  void (*and_shifted)(std::uint64_t* out, const std::uint64_t* a, const std::uint64_t* b,
                      std::size_t b_words, std::size_t shift, std::size_t n_words);
};

// Kernel table for a specific ISA, or nullptr when this build or this CPU
// cannot run it.
const KernelTable* table_for(Isa isa);

// Every ISA usable on this machine, scalar first.
std::vector<Isa> available_isas();

// The table used by the library. Picks the widest available ISA unless the
// PDC_SIMD environment variable names another available one.
const KernelTable& active();

// Forces the active table (tests and benchmarks). Throws DomainError when
// the ISA is unavailable.
void set_active(Isa isa);

// Convenience wrappers over active().

inline std::uint64_t popcount(std::span<const std::uint64_t> words) {
  return active().popcount(words.data(), words.size());
}

// Bits of `words` at positions [0, n_bits). Bits at or past n_bits are ignored.
std::uint64_t popcount_prefix(std::span<const std::uint64_t> words, std::size_t n_bits);

inline std::uint64_t and_shifted_popcount(std::span<const std::uint64_t> a,
                                          std::span<const std::uint64_t> b,
                                          std::size_t shift, std::size_t n_bits) {
  return active().and_shifted_popcount(a.data(), b.data(), b.size(), shift, n_bits);
}

inline void and_shifted(std::span<std::uint64_t> out, std::span<const std::uint64_t> a,
                        std::span<const std::uint64_t> b, std::size_t shift) {
  active().and_shifted(out.data(), a.data(), b.data(), b.size(), shift, out.size());
}

// Shared helper: word w of (b shifted by shift), zero past the end.
inline std::uint64_t shifted_word(const std::uint64_t* b, std::size_t b_words,
                                  std::size_t shift, std::size_t w) {
  const std::size_t q = w + shift / 64;
  const unsigned r = static_cast<unsigned>(shift % 64);
  const std::uint64_t lo = q < b_words ? b[q] : 0;
  if (r == 0) return lo;
  const std::uint64_t hi = q + 1 < b_words ? b[q + 1] : 0;
  return (lo >> r) | (hi << (64 - r));
}

namespace detail {
extern const KernelTable kScalarTable;
#if defined(PDC_HAVE_X86_KERNELS)
extern const KernelTable kAvx2Table;
extern const KernelTable kAvx512Table;
#endif
#if defined(PDC_HAVE_NEON_KERNELS)
extern const KernelTable kNeonTable;
#endif
}  // namespace detail

}  // namespace pdc::simd
