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

#include <immintrin.h>

#include <algorithm>
#include <bit>

#include "pdc/simd/kernels.hpp"

namespace pdc::simd {
namespace {

// Nibble-LUT popcount (Mula): per-byte counts summed into 64-bit lanes.
inline __m256i popcount_lanes(__m256i v) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                       0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low);
  const __m256i bytes =
      _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
  return _mm256_sad_epu8(bytes, _mm256_setzero_si256());
}

inline std::uint64_t horizontal_sum(__m256i acc) {
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  return lanes[0] + lanes[1] + lanes[2] + lanes[3];
}

// Words [w, w + 4) of b shifted by (64 q + r); caller guarantees w + q + 4 < b_words.
inline __m256i load_shifted(const std::uint64_t* b, std::size_t w, std::size_t q,
                            __m128i right, __m128i left) {
  const __m256i lo = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + w + q));
  const __m256i hi = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + w + q + 1));
  // Shift counts >= 64 yield zero, so r == 0 needs no special case.
  return _mm256_or_si256(_mm256_srl_epi64(lo, right), _mm256_sll_epi64(hi, left));
}

// Number of leading 4-word blocks whose shifted reads stay inside b.
inline std::size_t vector_words(std::size_t limit, std::size_t b_words, std::size_t q) {
  // A block starting at w reads b[w + q, w + q + 4].
  if (b_words < q + 1) return 0;
  return std::min(limit, b_words - q - 1) / 4 * 4;
}

std::uint64_t popcount_avx2(const std::uint64_t* words, std::size_t n_words) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t w = 0;
  for (; w + 4 <= n_words; w += 4) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words + w));
    acc = _mm256_add_epi64(acc, popcount_lanes(v));
  }
  std::uint64_t total = horizontal_sum(acc);
  for (; w < n_words; ++w) total += std::popcount(words[w]);
  return total;
}

std::uint64_t and_shifted_popcount_avx2(const std::uint64_t* a, const std::uint64_t* b,
                                        std::size_t b_words, std::size_t shift,
                                        std::size_t n_bits) {
  const std::size_t full = n_bits / 64;
  const std::size_t q = shift / 64;
  const unsigned r = static_cast<unsigned>(shift % 64);
  const __m128i right = _mm_cvtsi32_si128(static_cast<int>(r));
  const __m128i left = _mm_cvtsi32_si128(static_cast<int>(64 - r));

  const std::size_t vec_end = vector_words(full, b_words, q);
  __m256i acc = _mm256_setzero_si256();
  for (std::size_t w = 0; w < vec_end; w += 4) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + w));
    const __m256i vb = load_shifted(b, w, q, right, left);
    acc = _mm256_add_epi64(acc, popcount_lanes(_mm256_and_si256(va, vb)));
  }
  std::uint64_t total = horizontal_sum(acc);
  for (std::size_t w = vec_end; w < full; ++w)
    total += std::popcount(a[w] & shifted_word(b, b_words, shift, w));
  if (const unsigned rem = n_bits % 64; rem != 0) {
    const std::uint64_t mask = (std::uint64_t{1} << rem) - 1;
    total += std::popcount(a[full] & shifted_word(b, b_words, shift, full) & mask);
  }
  return total;
}

void and_shifted_avx2(std::uint64_t* out, const std::uint64_t* a, const std::uint64_t* b,
                      std::size_t b_words, std::size_t shift, std::size_t n_words) {
  const std::size_t q = shift / 64;
  const unsigned r = static_cast<unsigned>(shift % 64);
  const __m128i right = _mm_cvtsi32_si128(static_cast<int>(r));
  const __m128i left = _mm_cvtsi32_si128(static_cast<int>(64 - r));

  const std::size_t vec_end = vector_words(n_words, b_words, q);
  for (std::size_t w = 0; w < vec_end; w += 4) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + w));
    const __m256i vb = load_shifted(b, w, q, right, left);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + w), _mm256_and_si256(va, vb));
  }
  for (std::size_t w = vec_end; w < n_words; ++w)
    out[w] = a[w] & shifted_word(b, b_words, shift, w);
}

}  // namespace

namespace detail {
const KernelTable kAvx2Table{Isa::avx2, popcount_avx2, and_shifted_popcount_avx2,
                             and_shifted_avx2};
}

}  // namespace pdc::simd
