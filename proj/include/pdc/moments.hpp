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

// Moments of pi(x; q, a) over residue classes a mod q, and the exact
// identities connecting them to counts of distinct prime tuples:
//
//   sum_a pi(x;q,a)^m = sum_{i=0}^{m-1} C_{m,i} * T_{m-i}(x, q)
//
// where T_j counts ordered j-tuples of distinct primes <= x lying in one
// class, and C_{m,i} = S(m, m - i) (Stirling numbers of the second kind).

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "pdc/parallel.hpp"
#include "pdc/sieve.hpp"

namespace pdc {

enum class ClassSet { all, coprime };

// sum over the chosen classes of pi(x;q,a)^k, exact.
mpz_class moment_sum(const PrimeTable& table, std::uint64_t x, std::uint64_t q, unsigned k,
                     ClassSet classes);

// Stirling partition number S(n, j); exact for n <= 60.
mpz_class stirling2(unsigned n, unsigned j);

// C_{m,i} = S(m, m - i) for 0 <= i <= m - 1. Throws DomainError otherwise.
mpz_class stirling_coefficient(unsigned m, unsigned i);

// T_j(x, q) via the per-class falling factorial prod_{t<j} (pi(x;q,a) - t).
mpz_class distinct_tuple_sum(const PrimeTable& table, std::uint64_t x, std::uint64_t q,
                             unsigned j);

// T_j(x, q) by literally enumerating ordered tuples (oracle; x <= 100).
mpz_class distinct_tuple_sum_enumerated(const PrimeTable& table, std::uint64_t x,
                                        std::uint64_t q, unsigned j);

struct IdentityCheck {
  bool ok = false;
  mpz_class lhs;
  mpz_class rhs;
  mpz_class residual;  // lhs - rhs
};

// sum_a pi^m against sum_i C_{m,i} T_{m-i}; m <= 5, x <= 10^5.
IdentityCheck verify_power_identity(const PrimeTable& table, std::uint64_t x, std::uint64_t q,
                                    unsigned m);

// T_k(x, q) against k! * sum_{q | d_i} G_{k-1}(x, {d_1 < ... < d_{k-1}});
// k in {2, 3}, x <= 10^4.
IdentityCheck verify_tuple_link(const PrimeTable& table, std::uint64_t x, std::uint64_t q,
                                unsigned k, Parallelism par = {});

struct InequalityReport {
  // sum_a pi^k - (pi(x)/phi(q)) sum_a pi^(k-1), over all classes.
  long double margin_all = 0;
  // Same over coprime classes: B_k(x, q).
  long double margin_coprime = 0;
  // (pi(x)/phi(q))^(k-1) log q, implied constant taken as 1.
  long double budget = 0;
  bool within_budget = false;  // margin_all >= -budget
  // q <= x / log^2 x, the range the bound is stated for; reported, not enforced.
  bool q_in_range = false;
};

// Reports the recursive moment lower bound; k >= 2.
InequalityReport verify_moment_inequality(const PrimeTable& table, std::uint64_t x,
                                          std::uint64_t q, unsigned k);

std::uint64_t euler_phi(std::uint64_t q);

struct MomentReport {
  std::uint64_t x = 0;
  std::uint64_t q = 0;
  unsigned k = 0;
  std::uint64_t pi_x = 0;
  std::uint64_t phi_q = 0;
  std::vector<mpz_class> coprime_moments;  // A_0 .. A_k
  mpz_class full_sum;                      // sum over all classes of pi^k
  long double b_k = 0;                     // A_k - pi(x)/phi(q) A_{k-1}
  std::vector<mpz_class> distinct_sums;    // T_1 .. T_k
  bool identity_ok = false;
  mpz_class identity_residual;
  InequalityReport inequality;             // empty when k < 2
  bool cauchy_schwarz_ok = false;          // A_2 A_0 >= A_1^2
  // sum_{q | d_i} G_k / (x^{k+1} / ((k+1)! phi(q)^k log^{k+1} x))
  double lower_bound_ratio = 0;
};

MomentReport moment_report(const PrimeTable& table, std::uint64_t x, std::uint64_t q,
                           unsigned k);

}  // namespace pdc
