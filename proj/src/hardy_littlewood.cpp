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

#include "pdc/hardy_littlewood.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "pdc/counting.hpp"
#include "pdc/error.hpp"

namespace pdc {
namespace {

constexpr int kMaxDepth = 48;

struct Panel {
  long double a, b, fa, fm, fb, whole, tolerance;
  int depth;
};

// Iterative adaptive Simpson with Richardson correction on [a, b].
template <class F>
Integral adaptive_simpson(F&& f, long double a, long double b, long double tolerance) {
  Integral out;
  const long double fa = f(a), fb = f(b), fm = f((a + b) / 2);
  std::vector<Panel> stack;
  stack.push_back({a, b, fa, fm, fb, (b - a) / 6 * (fa + 4 * fm + fb), tolerance, 0});
  while (!stack.empty()) {
    const Panel p = stack.back();
    stack.pop_back();
    const long double m = (p.a + p.b) / 2;
    const long double lm = (p.a + m) / 2, rm = (m + p.b) / 2;
    const long double flm = f(lm), frm = f(rm);
    const long double left = (m - p.a) / 6 * (p.fa + 4 * flm + p.fm);
    const long double right = (p.b - m) / 6 * (p.fm + 4 * frm + p.fb);
    const long double diff = left + right - p.whole;
    if (std::fabs(diff) <= 15 * p.tolerance || p.depth >= kMaxDepth) {
      out.value += left + right + diff / 15;
      out.error_estimate += std::fabs(diff) / 15;
      continue;
    }
    stack.push_back({m, p.b, p.fm, frm, p.fb, right, p.tolerance / 2, p.depth + 1});
    stack.push_back({p.a, m, p.fa, flm, p.fm, left, p.tolerance / 2, p.depth + 1});
  }
  return out;
}

}  // namespace

Integral li_k_integral(double x, unsigned k, double tolerance) {
  if (!(x >= 2.0)) throw DomainError("li_k needs x >= 2");
  if (!(tolerance > 0.0)) throw DomainError("quadrature tolerance must be positive");
  if (x == 2.0) return {};
  const auto integrand = [k](long double t) {
    return 1.0L / std::pow(std::log(t), static_cast<long double>(k));
  };
  // Geometric panels [2, 4], [4, 8], ... keep the integrand's scale uniform
  // within each panel; tolerance is split by panel length.
  Integral total;
  const long double hi = x;
  const long double span = hi - 2.0L;
  for (long double a = 2.0L; a < hi;) {
    const long double b = std::min(hi, 2 * a);
    const Integral part = adaptive_simpson(integrand, a, b, tolerance * (b - a) / span);
    total.value += part.value;
    total.error_estimate += part.error_estimate;
    a = b;
  }
  return total;
}

LiUpper li_upper(std::uint64_t x, const DifferenceSet& d, double tolerance) {
  if (x <= d.largest() + 2) return {0, 0, true};
  const Integral i = li_k_integral(static_cast<double>(x - d.largest()),
                                   static_cast<unsigned>(d.k() + 1), tolerance);
  return {i.value, i.error_estimate, false};
}

HFactor h_factor(double x, const DifferenceSet& d) {
  if (!(x >= 10.0)) throw DomainError("h_factor needs x >= 10");
  const double k1 = static_cast<double>(d.k() + 1);
  const double lx = std::log(x);
  HFactor h;
  h.value = 1.0 + k1 / lx + k1 * (k1 + 1) / (lx * lx);
  h.error_dk = static_cast<double>(d.largest()) / (x * lx);
  h.error_log3 = 1.0 / (lx * lx * lx);
  return h;
}

Prediction predict_only(std::uint64_t x, const DifferenceSet& d, double tolerance) {
  Prediction out;
  out.x = x;
  out.set = d;
  out.singular = singular_series(with_zero(d), tolerance);
  if (out.singular.is_zero) return out;
  const LiUpper li = li_upper(x, d, tolerance);
  out.li = li.value;
  out.quadrature_error = li.error_estimate;
  out.predicted = out.singular.value * li.value;
  return out;
}

Prediction predict(const PrimeTable& table, std::uint64_t x, const DifferenceSet& d,
                   double tolerance) {
  Prediction out = predict_only(x, d, tolerance);
  const std::uint64_t exact = count_tuple(table, x, d).count;
  out.exact = exact;
  if (out.predicted > 0) out.ratio = static_cast<double>(exact / out.predicted);
  if (x >= 3) {
    const long double lx = std::log(static_cast<long double>(x));
    const long double e = static_cast<long double>(exact) - out.predicted;
    out.normalized_error = static_cast<double>(
        std::fabs(e) * std::pow(lx, static_cast<long double>(d.k() + 3)) / x);
  }
  return out;
}

}  // namespace pdc
