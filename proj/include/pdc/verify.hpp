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

// Theorem-level quantities of a champion set, and pass/report verdicts.
//
// For a winner D* with d* = gcd(D*):
//   - distinct prime factors of d* and sum_{p | d*} 1/p, beside log log log x
//   - sum_{p !| d*, p <= 2 log x} 1/p  <=  log k! + k log 2 + log(2 (k+1)^2) + slack
//   - the same with Delta({0} u D*) in place of d*, right side divided by k
//   - d* squarefree, and the largest primorial dividing d*

#include <cstdint>
#include <string>
#include <vector>

#include "pdc/champions.hpp"
#include "pdc/sieve.hpp"

namespace pdc {

struct TheoremProfile {
  std::uint64_t x = 0;
  unsigned k = 0;
  DifferenceSet winner{1};
  std::uint64_t d_star = 0;
  std::vector<std::uint64_t> prime_factors;  // distinct, ascending
  unsigned omega = 0;
  long double reciprocal_sum = 0;
  double logloglog_x = 0;
  // sum over small primes not dividing d* (resp. Delta), against its bound.
  long double missing_lhs = 0;
  double missing_rhs = 0;
  long double missing_delta_lhs = 0;
  double missing_delta_rhs = 0;
  bool squarefree = true;
  std::uint64_t primorial_divisor = 1;
  // Largest prime factor of d* over log log x (0 when d* = 1).
  double largest_prime_over_loglog = 0;
};

// Profile of one winner. d* is factored by trial division over the table's
// primes; throws ResourceError when sqrt(d*) exceeds the table bound.
TheoremProfile profile(const ChampionRecord& record, const DifferenceSet& winner,
                       const PrimeTable& table);

// One profile per winner, in winner order. Throws DomainError when the
// record has no winners.
std::vector<TheoremProfile> profile_all(const ChampionRecord& record, const PrimeTable& table);

enum class VerdictKind { assert_claim, report };

struct Verdict {
  std::string claim;
  VerdictKind kind = VerdictKind::report;
  bool holds = false;
  double lhs = 0;
  double rhs = 0;
  std::string note;
};

struct VerdictOptions {
  double slack = 1.0;
  // Search provenance of the profiled record; squarefreeness and the
  // divisibility by 6 are asserted only for exhaustive winners.
  SearchMode mode = SearchMode::exhaustive;
};

std::vector<Verdict> verdicts(const TheoremProfile& profile, const VerdictOptions& options = {});

// True when every assert-class verdict holds.
bool all_asserts_hold(const std::vector<Verdict>& verdicts);

}  // namespace pdc
