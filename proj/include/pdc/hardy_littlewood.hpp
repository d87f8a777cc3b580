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
#include <optional>

#include "pdc/difference_set.hpp"
#include "pdc/sieve.hpp"
#include "pdc/singular.hpp"

namespace pdc {

struct Integral {
  long double value = 0;
  // Sum of the local Richardson error estimates; kept below the requested
  // absolute tolerance.
  long double error_estimate = 0;
};

// int_2^x dt / log^k t by adaptive Simpson, absolute error <= tolerance.
Integral li_k_integral(double x, unsigned k, double tolerance);
inline long double li_k(double x, unsigned k, double tolerance) {
  return li_k_integral(x, k, tolerance).value;
}

struct LiUpper {
  long double value = 0;
  long double error_estimate = 0;
  bool degenerate = false;  // x <= d_k + 2
};

// int_2^{x - d_k} dt / log^{k+1} t.
LiUpper li_upper(std::uint64_t x, const DifferenceSet& d, double tolerance);

// The displayed terms of the expansion factor
//   H(x, D_k) = 1 + (k+1)/log x + (k+1)(k+2)/log^2 x
// with the two error terms reported as magnitudes (implied constant 1).
struct HFactor {
  double value = 0;
  double error_dk = 0;    // d_k / (x log x)
  double error_log3 = 0;  // 1 / log^3 x
};

HFactor h_factor(double x, const DifferenceSet& d);

struct Prediction {
  std::uint64_t x = 0;
  DifferenceSet set{1};
  SingularValue singular;
  long double li = 0;
  long double predicted = 0;
  long double quadrature_error = 0;
  std::optional<std::uint64_t> exact;
  std::optional<double> ratio;             // exact / predicted, when both nonzero
  std::optional<double> normalized_error;  // |exact - predicted| log^{k+3} x / x
};

// Main-term prediction S({0} u D) Li_{k+1}(x, D) against the exact count.
// `tolerance` is the relative tolerance for S and the absolute one for Li.
Prediction predict(const PrimeTable& table, std::uint64_t x, const DifferenceSet& d,
                   double tolerance);

// Same without an exact count.
Prediction predict_only(std::uint64_t x, const DifferenceSet& d, double tolerance);

}  // namespace pdc
