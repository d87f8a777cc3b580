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

// Requires AVX512F + AVX512_VPOPCNTDQ; dispatch checks both at runtime.

namespace pdc::simd {
namespace {

inline __m512i load_shifted(const std::uint64_t* b, std::size_t w, std::size_t q,
                            __m128i right, __m128i left) {
  const __m512i lo = _mm512_loadu_si512(b + w + q);
  const __m512i hi = _mm512_loadu_si512(b + w + q + 1);
  return _mm512_or_si512(_mm512_srl_epi64(lo, right), _mm512_sll_epi64(hi, left));
}

inline std::size_t vector_words(std::size_t limit, std::size_t b_words, std::size_t q) {
  // A block starting at w reads b[w + q, w + q + 8].
  if (b_words < q + 1) return 0;
  return std::min(limit, b_words - q - 1) / 8 * 8;
}

std::uint64_t popcount_avx512(const std::uint64_t* words, std::size_t n_words) {
  __m512i acc = _mm512_setzero_si512();
  std::size_t w = 0;
  for (; w + 8 <= n_words; w += 8)
    acc = _mm512_add_epi64(acc, _mm512_popcnt_epi64(_mm512_loadu_si512(words + w)));
  std::uint64_t total = static_cast<std::uint64_t>(_mm512_reduce_add_epi64(acc));
  for (; w < n_words; ++w) total += std::popcount(words[w]);
  return total;
}

std::uint64_t and_shifted_popcount_avx512(const std::uint64_t* a, const std::uint64_t* b,
                                          std::size_t b_words, std::size_t shift,
                                          std::size_t n_bits) {
  const std::size_t full = n_bits / 64;
  const std::size_t q = shift / 64;
  const unsigned r = static_cast<unsigned>(shift % 64);
  const __m128i right = _mm_cvtsi32_si128(static_cast<int>(r));
  const __m128i left = _mm_cvtsi32_si128(static_cast<int>(64 - r));

  const std::size_t vec_end = vector_words(full, b_words, q);
  __m512i acc = _mm512_setzero_si512();
  for (std::size_t w = 0; w < vec_end; w += 8) {
    const __m512i va = _mm512_loadu_si512(a + w);
    const __m512i vb = load_shifted(b, w, q, right, left);
    acc = _mm512_add_epi64(acc, _mm512_popcnt_epi64(_mm512_and_si512(va, vb)));
  }
  std::uint64_t total = static_cast<std::uint64_t>(_mm512_reduce_add_epi64(acc));
  for (std::size_t w = vec_end; w < full; ++w)
    total += std::popcount(a[w] & shifted_word(b, b_words, shift, w));
  if (const unsigned rem = n_bits % 64; rem != 0) {
    const std::uint64_t mask = (std::uint64_t{1} << rem) - 1;
    total += std::popcount(a[full] & shifted_word(b, b_words, shift, full) & mask);
  }
  return total;
}

void and_shifted_avx512(std::uint64_t* out, const std::uint64_t* a, const std::uint64_t* b,
                        std::size_t b_words, std::size_t shift, std::size_t n_words) {
  const std::size_t q = shift / 64;
  const unsigned r = static_cast<unsigned>(shift % 64);
  const __m128i right = _mm_cvtsi32_si128(static_cast<int>(r));
  const __m128i left = _mm_cvtsi32_si128(static_cast<int>(64 - r));

  const std::size_t vec_end = vector_words(n_words, b_words, q);
  for (std::size_t w = 0; w < vec_end; w += 8) {
    const __m512i va = _mm512_loadu_si512(a + w);
    _mm512_storeu_si512(out + w, _mm512_and_si512(va, load_shifted(b, w, q, right, left)));
  }
  for (std::size_t w = vec_end; w < n_words; ++w)
    out[w] = a[w] & shifted_word(b, b_words, shift, w);
}

}  // namespace

namespace detail {
const KernelTable kAvx512Table{Isa::avx512, popcount_avx512, and_shifted_popcount_avx512,
                               and_shifted_avx512};
}

}  // namespace pdc::simd
