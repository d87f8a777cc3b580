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

// Singular series and the small arithmetic around it.
//
//   S(D) = prod_p (1 - 1/p)^(-|D|) (1 - v_D(p)/p)
//
// where v_D(p) counts the residue classes mod p hit by D. Factors are
// summed in the log domain in long double. Past the truncation prime P
// every prime has v_D(p) = |D|, and the omitted tail is bounded by
//
//   |log tail| <= m^2 * sum_{p > P} p^-2 <= 2.51012 m^2 / (P log P),
//
// valid for P >= 2m (m = |D|), using pi(t) < 1.25506 t / log t.

#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "pdc/difference_set.hpp"

namespace pdc {

struct SingularValue {
  long double value = 0;
  // Largest prime whose factor was multiplied in exactly (0 when no
  // factor needed computing).
  std::uint64_t truncation_prime = 0;
  // Certified bound on |value / S - 1| from the omitted tail.
  double tail_bound = 0;
  bool is_zero = false;
};

struct SingularOptions {
  std::uint64_t min_truncation = 100000;
  // Factor budget: the truncation point never grows past this.
  std::uint64_t max_truncation = std::uint64_t{1} << 31;
};

// Number of distinct residues of `set` modulo the prime p.
// Throws DomainError if p is not prime or the set is empty.
std::uint64_t residue_count(std::span<const std::int64_t> set, std::uint64_t p);

// Product of the pairwise differences of {0} u D.
mpz_class delta(const DifferenceSet& d);

// S(set) to relative tolerance in (0, 1). `set` holds distinct integers;
// callers pass {0} u D_k. Throws ResourceError if the tail cannot be pushed
// below tolerance within options.max_truncation.
SingularValue singular_series(std::span<const std::int64_t> set, double tolerance,
                              const SingularOptions& options = {});

// S(set) with exact factors for every prime <= truncation. Throws
// DomainError if some prime above the truncation still divides a
// difference, or truncation < 2 |set|.
SingularValue singular_series_truncated(std::span<const std::int64_t> set,
                                        std::uint64_t truncation);

// The set {0} u D as signed integers.
std::vector<std::int64_t> with_zero(const DifferenceSet& d);

// Certified relative tail bound for m elements truncated at P.
double singular_tail_bound(std::size_t m, std::uint64_t truncation);

// prod_{p <= y} (1 - 1/p)^-1, summed in logs at long double precision.
long double mertens_product(double y);

struct Primorial {
  unsigned index = 0;  // n: product of the first n primes
  mpz_class value = 1;
  std::uint64_t largest_prime = 0;
};

// p_n# for n >= 1.
Primorial primorial(unsigned n);

// Largest primorial not exceeding x (x >= 2).
Primorial primorial_floor(double x);
Primorial primorial_floor(const mpz_class& x);

// Deterministic primality test for 64-bit integers.
bool is_prime_u64(std::uint64_t n);

}  // namespace pdc
