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

#include <bit>

#include "pdc/simd/kernels.hpp"

namespace pdc::simd {
namespace {

std::uint64_t popcount_scalar(const std::uint64_t* words, std::size_t n_words) {
  std::uint64_t total = 0;
  for (std::size_t w = 0; w < n_words; ++w) total += std::popcount(words[w]);
  return total;
}

std::uint64_t and_shifted_popcount_scalar(const std::uint64_t* a, const std::uint64_t* b,
                                          std::size_t b_words, std::size_t shift,
                                          std::size_t n_bits) {
  const std::size_t full = n_bits / 64;
  std::uint64_t total = 0;
  for (std::size_t w = 0; w < full; ++w)
    total += std::popcount(a[w] & shifted_word(b, b_words, shift, w));
  if (const unsigned rem = n_bits % 64; rem != 0) {
    const std::uint64_t mask = (std::uint64_t{1} << rem) - 1;
    total += std::popcount(a[full] & shifted_word(b, b_words, shift, full) & mask);
  }
  return total;
}

void and_shifted_scalar(std::uint64_t* out, const std::uint64_t* a, const std::uint64_t* b,
                        std::size_t b_words, std::size_t shift, std::size_t n_words) {
  for (std::size_t w = 0; w < n_words; ++w)
    out[w] = a[w] & shifted_word(b, b_words, shift, w);
}

}  // namespace

namespace detail {
const KernelTable kScalarTable{Isa::scalar, popcount_scalar, and_shifted_popcount_scalar,
                               and_shifted_scalar};
}

}  // namespace pdc::simd
