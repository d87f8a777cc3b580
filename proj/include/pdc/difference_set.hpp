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
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace pdc {

// A set D_k = {d_1 < ... < d_k} of positive differences, stored sorted,
// with its gcd d and reduced pattern D' (D = d * D').
class DifferenceSet {
 public:
  // Sorts the input. Throws DomainError on an empty input, a zero element
  // or duplicates.
  explicit DifferenceSet(std::vector<std::uint64_t> elements);
  DifferenceSet(std::initializer_list<std::uint64_t> elements)
      : DifferenceSet(std::vector<std::uint64_t>(elements)) {}

  std::span<const std::uint64_t> elements() const { return elements_; }
  std::size_t k() const { return elements_.size(); }
  std::uint64_t largest() const { return elements_.back(); }
  std::uint64_t operator[](std::size_t i) const { return elements_[i]; }

  std::uint64_t gcd() const { return gcd_; }
  std::vector<std::uint64_t> reduced() const;

  // Product of all pairwise differences of {0} u D, exact.
  mpz_class delta() const;

  // Elements joined by `sep`, e.g. "2 6".
  std::string to_string(char sep = ' ') const;

  friend auto operator<=>(const DifferenceSet&, const DifferenceSet&) = default;
  friend bool operator==(const DifferenceSet&, const DifferenceSet&) = default;

 private:
  std::vector<std::uint64_t> elements_;
  std::uint64_t gcd_ = 0;
};

// Parses "2,6" or "2 6" (also ';' separated). Throws DomainError.
std::vector<std::int64_t> parse_integer_list(const std::string& text);

}  // namespace pdc
