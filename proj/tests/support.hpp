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

#include <cstdint>
#include <memory>
#include <random>
#include <vector>

#include "pdc/sieve.hpp"

namespace pdc::test {

inline bool trial_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<std::uint64_t> trial_primes(std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 2; n <= hi; ++n)
    if (trial_prime(n)) out.push_back(n);
  return out;
}

// Fixed-seed generator so failures reproduce.
inline std::mt19937_64& rng() {
  static std::mt19937_64 g(0x5eed'2026);
  return g;
}

inline std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng());
}

inline const PrimeTable& table_1e6() {
  static const PrimeTable t = build_table(1000000);
  return t;
}

}  // namespace pdc::test
