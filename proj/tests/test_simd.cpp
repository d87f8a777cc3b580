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

#include <doctest.h>

#include <bit>
#include <vector>

#include "pdc/error.hpp"
#include "pdc/simd/kernels.hpp"
#include "support.hpp"

using namespace pdc;
using pdc::test::uniform;

namespace {

std::vector<std::uint64_t> random_words(std::size_t n, unsigned density) {
  std::vector<std::uint64_t> v(n);
  for (auto& w : v) {
    w = pdc::test::rng()();
    for (unsigned i = 0; i < density; ++i) w &= pdc::test::rng()();
  }
  return v;
}

bool bit(const std::vector<std::uint64_t>& v, std::size_t i) {
  return i / 64 < v.size() && ((v[i / 64] >> (i % 64)) & 1);
}

}  // namespace

TEST_SUITE("simd") {
  TEST_CASE("scalar is always available and first") {
    const auto isas = simd::available_isas();
    REQUIRE(!isas.empty());
    CHECK(isas.front() == simd::Isa::scalar);
    CHECK(simd::table_for(simd::Isa::scalar) != nullptr);
  }

  TEST_CASE("every ISA matches a per-bit loop") {
    for (const auto isa : simd::available_isas()) {
      CAPTURE(simd::isa_name(isa));
      const auto& k = *simd::table_for(isa);
      for (int trial = 0; trial < 300; ++trial) {
        const std::size_t a_words = uniform(0, 70), b_words = uniform(0, 90);
        const auto a = random_words(a_words, static_cast<unsigned>(uniform(0, 2)));
        const auto b = random_words(b_words, static_cast<unsigned>(uniform(0, 2)));
        const std::size_t shift = uniform(0, 64 * b_words + 130);
        const std::size_t n_bits = uniform(0, 64 * a_words);

        std::uint64_t pc = 0;
        for (std::size_t i = 0; i < 64 * a_words; ++i) pc += bit(a, i);
        CHECK(k.popcount(a.data(), a.size()) == pc);

        std::uint64_t expect = 0;
        for (std::size_t i = 0; i < n_bits; ++i) expect += bit(a, i) && bit(b, i + shift);
        CHECK(k.and_shifted_popcount(a.data(), b.data(), b.size(), shift, n_bits) == expect);

        std::vector<std::uint64_t> out(a_words, ~0ULL);
        k.and_shifted(out.data(), a.data(), b.data(), b.size(), shift, a_words);
        for (std::size_t w = 0; w < a_words; ++w) {
          std::uint64_t want = 0;
          for (unsigned j = 0; j < 64; ++j)
            if (bit(a, 64 * w + j) && bit(b, 64 * w + j + shift)) want |= 1ULL << j;
          REQUIRE(out[w] == want);
        }
      }
    }
  }

  TEST_CASE("and_shifted may run in place") {
    for (const auto isa : simd::available_isas()) {
      const auto& k = *simd::table_for(isa);
      auto a = random_words(40, 0);
      const auto b = random_words(45, 0);
      std::vector<std::uint64_t> copy(40);
      k.and_shifted(copy.data(), a.data(), b.data(), b.size(), 77, 40);
      k.and_shifted(a.data(), a.data(), b.data(), b.size(), 77, 40);
      CHECK(a == copy);
    }
  }

  TEST_CASE("popcount_prefix ignores bits at and past n_bits") {
    const std::vector<std::uint64_t> w = {~0ULL, ~0ULL, ~0ULL};
    CHECK(simd::popcount_prefix(w, 0) == 0);
    CHECK(simd::popcount_prefix(w, 1) == 1);
    CHECK(simd::popcount_prefix(w, 64) == 64);
    CHECK(simd::popcount_prefix(w, 130) == 130);
  }

  TEST_CASE("set_active switches and restores") {
    const auto before = simd::active().isa;
    for (const auto isa : simd::available_isas()) {
      simd::set_active(isa);
      CHECK(simd::active().isa == isa);
    }
    simd::set_active(before);
#if !defined(__aarch64__)
    CHECK_THROWS_AS(simd::set_active(simd::Isa::neon), DomainError);
#endif
  }
}
