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

#include <arm_neon.h>

#include <algorithm>
#include <bit>

#include "pdc/simd/kernels.hpp"

namespace pdc::simd {
namespace {

inline uint64x2_t load_shifted(const std::uint64_t* b, std::size_t w, std::size_t q,
                               int64x2_t right, int64x2_t left, bool aligned) {
  const uint64x2_t lo = vld1q_u64(b + w + q);
  if (aligned) return lo;
  const uint64x2_t hi = vld1q_u64(b + w + q + 1);
  return vorrq_u64(vshlq_u64(lo, right), vshlq_u64(hi, left));
}

inline std::uint64_t lane_popcount(uint64x2_t v) {
  return vaddlvq_u8(vcntq_u8(vreinterpretq_u8_u64(v)));
}

inline std::size_t vector_words(std::size_t limit, std::size_t b_words, std::size_t q) {
  // A block starting at w reads b[w + q, w + q + 2].
  if (b_words < q + 1) return 0;
  return std::min(limit, b_words - q - 1) / 2 * 2;
}

std::uint64_t popcount_neon(const std::uint64_t* words, std::size_t n_words) {
  std::uint64_t total = 0;
  std::size_t w = 0;
  for (; w + 2 <= n_words; w += 2) total += lane_popcount(vld1q_u64(words + w));
  for (; w < n_words; ++w) total += std::popcount(words[w]);
  return total;
}

std::uint64_t and_shifted_popcount_neon(const std::uint64_t* a, const std::uint64_t* b,
                                        std::size_t b_words, std::size_t shift,
                                        std::size_t n_bits) {
  const std::size_t full = n_bits / 64;
  const std::size_t q = shift / 64;
  const int r = static_cast<int>(shift % 64);
  const int64x2_t right = vdupq_n_s64(-r);
  const int64x2_t left = vdupq_n_s64(64 - r);

  const std::size_t vec_end = vector_words(full, b_words, q);
  std::uint64_t total = 0;
  for (std::size_t w = 0; w < vec_end; w += 2) {
    const uint64x2_t vb = load_shifted(b, w, q, right, left, r == 0);
    total += lane_popcount(vandq_u64(vld1q_u64(a + w), vb));
  }
  for (std::size_t w = vec_end; w < full; ++w)
    total += std::popcount(a[w] & shifted_word(b, b_words, shift, w));
  if (const unsigned rem = n_bits % 64; rem != 0) {
    const std::uint64_t mask = (std::uint64_t{1} << rem) - 1;
    total += std::popcount(a[full] & shifted_word(b, b_words, shift, full) & mask);
  }
  return total;
}

void and_shifted_neon(std::uint64_t* out, const std::uint64_t* a, const std::uint64_t* b,
                      std::size_t b_words, std::size_t shift, std::size_t n_words) {
  const std::size_t q = shift / 64;
  const int r = static_cast<int>(shift % 64);
  const int64x2_t right = vdupq_n_s64(-r);
  const int64x2_t left = vdupq_n_s64(64 - r);

  const std::size_t vec_end = vector_words(n_words, b_words, q);
  for (std::size_t w = 0; w < vec_end; w += 2) {
    const uint64x2_t vb = load_shifted(b, w, q, right, left, r == 0);
    vst1q_u64(out + w, vandq_u64(vld1q_u64(a + w), vb));
  }
  for (std::size_t w = vec_end; w < n_words; ++w)
    out[w] = a[w] & shifted_word(b, b_words, shift, w);
}

}  // namespace

namespace detail {
const KernelTable kNeonTable{Isa::neon, popcount_neon, and_shifted_popcount_neon,
                             and_shifted_neon};
}

}  // namespace pdc::simd
