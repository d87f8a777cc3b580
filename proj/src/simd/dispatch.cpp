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

#include <atomic>
#include <bit>
#include <cstdlib>
#include <string>

#include "pdc/error.hpp"
#include "pdc/simd/kernels.hpp"

namespace pdc::simd {
namespace {

bool cpu_supports(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
#if defined(PDC_HAVE_X86_KERNELS)
    case Isa::avx2:
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
    case Isa::avx512:
      return __builtin_cpu_supports("avx512f") &&
             __builtin_cpu_supports("avx512vpopcntdq") &&
             __builtin_cpu_supports("avx512bw");
#endif
#if defined(PDC_HAVE_NEON_KERNELS)
    case Isa::neon:
      return true;
#endif
    default:
      return false;
  }
}

const KernelTable* compiled_table(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return &detail::kScalarTable;
#if defined(PDC_HAVE_X86_KERNELS)
    case Isa::avx2:
      return &detail::kAvx2Table;
    case Isa::avx512:
      return &detail::kAvx512Table;
#endif
#if defined(PDC_HAVE_NEON_KERNELS)
    case Isa::neon:
      return &detail::kNeonTable;
#endif
    default:
      return nullptr;
  }
}

const KernelTable* pick_default() {
  if (const char* forced = std::getenv("PDC_SIMD")) {
    const std::string name(forced);
    for (Isa isa : available_isas())
      if (isa_name(isa) == name) return table_for(isa);
  }
  return table_for(available_isas().back());
}

std::atomic<const KernelTable*>& active_slot() {
  static std::atomic<const KernelTable*> slot{pick_default()};
  return slot;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::avx512: return "avx512";
    case Isa::neon: return "neon";
  }
  return "unknown";
}

const KernelTable* table_for(Isa isa) {
  return cpu_supports(isa) ? compiled_table(isa) : nullptr;
}

std::vector<Isa> available_isas() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::scalar, Isa::neon, Isa::avx2, Isa::avx512})
    if (table_for(isa) != nullptr) out.push_back(isa);
  return out;
}

const KernelTable& active() { return *active_slot().load(std::memory_order_acquire); }

void set_active(Isa isa) {
  const KernelTable* table = table_for(isa);
  if (table == nullptr)
    throw DomainError("SIMD kernels for " + std::string(isa_name(isa)) +
                      " are not available on this machine");
  active_slot().store(table, std::memory_order_release);
}

std::uint64_t popcount_prefix(std::span<const std::uint64_t> words, std::size_t n_bits) {
  const std::size_t full = n_bits / 64;
  std::uint64_t total = active().popcount(words.data(), full);
  if (const unsigned rem = n_bits % 64; rem != 0)
    total += static_cast<std::uint64_t>(std::popcount(
        words[full] & ((std::uint64_t{1} << rem) - 1)));
  return total;
}

}  // namespace pdc::simd
