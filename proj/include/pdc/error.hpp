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

#include <stdexcept>
#include <string>

namespace pdc {

// Argument outside the supported range (bounds, x beyond a table, ...).
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Mathematically invalid input (non-prime modulus, empty set, i >= m, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A configured budget (memory, truncation, factorization) would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or corrupt on-disk data.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Fewer primes below x than the operation needs.
class InsufficientPrimesError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace pdc
