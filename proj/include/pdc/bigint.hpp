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
#include <limits>
#include <optional>

#include <gmpxx.h>

namespace pdc {

static_assert(sizeof(unsigned long) == sizeof(std::uint64_t),
              "mpz conversions assume 64-bit unsigned long");

inline mpz_class to_mpz(std::uint64_t v) { return mpz_class(static_cast<unsigned long>(v)); }

inline std::optional<std::uint64_t> to_u64(const mpz_class& v) {
  if (sgn(v) < 0 || !v.fits_ulong_p()) return std::nullopt;
  return static_cast<std::uint64_t>(v.get_ui());
}

}  // namespace pdc
