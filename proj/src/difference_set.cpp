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

#include "pdc/difference_set.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "pdc/bigint.hpp"
#include "pdc/error.hpp"

namespace pdc {

DifferenceSet::DifferenceSet(std::vector<std::uint64_t> elements)
    : elements_(std::move(elements)) {
  if (elements_.empty()) throw DomainError("difference set must be nonempty");
  std::sort(elements_.begin(), elements_.end());
  if (elements_.front() == 0) throw DomainError("difference set elements must be positive");
  if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end())
    throw DomainError("difference set elements must be distinct");
  gcd_ = 0;
  for (const std::uint64_t d : elements_) gcd_ = std::gcd(gcd_, d);
}

std::vector<std::uint64_t> DifferenceSet::reduced() const {
  std::vector<std::uint64_t> out(elements_);
  for (auto& d : out) d /= gcd_;
  return out;
}

mpz_class DifferenceSet::delta() const {
  mpz_class product = 1;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    product *= to_mpz(elements_[i]);
    for (std::size_t j = 0; j < i; ++j)
      product *= to_mpz(elements_[i] - elements_[j]);
  }
  return product;
}

std::string DifferenceSet::to_string(char sep) const {
  std::string out;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i) out.push_back(sep);
    out += std::to_string(elements_[i]);
  }
  return out;
}

std::vector<std::int64_t> parse_integer_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t end = text.find_first_of(", ;", pos);
    const std::string token = text.substr(pos, end == std::string::npos ? end : end - pos);
    if (!token.empty()) {
      std::int64_t value = 0;
      const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc{} || ptr != token.data() + token.size())
        throw DomainError("not an integer: '" + token + "'");
      out.push_back(value);
    }
    if (end == std::string::npos) break;
    pos = end + 1;
  }
  if (out.empty()) throw DomainError("empty integer list");
  return out;
}

}  // namespace pdc
