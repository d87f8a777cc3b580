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

#include <algorithm>
#include <array>
#include <fstream>
#include <string>

#include "pdc/error.hpp"
#include "pdc/sieve.hpp"

namespace pdc {
namespace {

constexpr std::array<char, 4> kMagic{'P', 'D', 'C', 'S'};
constexpr std::uint8_t kVersion = 0x01;
constexpr std::size_t kHeaderBytes = kMagic.size() + 1 + 8;

}  // namespace

void save_table(const PrimeTable& table, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");

  std::string buffer(kMagic.begin(), kMagic.end());
  buffer.push_back(static_cast<char>(kVersion));
  for (int i = 0; i < 8; ++i) buffer.push_back(static_cast<char>((table.bound() >> (8 * i)) & 0xff));

  const std::uint64_t n_bytes = (table.odd_bit_count() + 7) / 8;
  const auto words = table.odd_bits();
  buffer.reserve(buffer.size() + n_bytes);
  for (std::uint64_t b = 0; b < n_bytes; ++b)
    buffer.push_back(static_cast<char>((words[b / 8] >> (8 * (b % 8))) & 0xff));

  out.write(buffer.data(), static_cast<std::streamsize>(buffer.size()));
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

PrimeTable load_table(const std::filesystem::path& path,
                      std::optional<std::uint64_t> expected_count) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open sieve cache " + path.string());
  std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

  if (data.size() < kHeaderBytes || !std::equal(kMagic.begin(), kMagic.end(), data.begin()))
    throw FormatError(path.string() + ": bad magic, not a sieve cache");
  if (static_cast<std::uint8_t>(data[4]) != kVersion)
    throw FormatError(path.string() + ": unsupported sieve cache version " +
                      std::to_string(static_cast<unsigned>(static_cast<std::uint8_t>(data[4]))));

  std::uint64_t bound = 0;
  for (int i = 0; i < 8; ++i)
    bound |= static_cast<std::uint64_t>(static_cast<std::uint8_t>(data[5 + i])) << (8 * i);
  if (bound < 2 || bound > kMaxSieveBound)
    throw FormatError(path.string() + ": bound " + std::to_string(bound) + " out of range");

  const std::uint64_t n_bits = (bound + 1) / 2;
  const std::uint64_t n_bytes = (n_bits + 7) / 8;
  if (data.size() != kHeaderBytes + n_bytes)
    throw FormatError(path.string() + ": payload size does not match bound " +
                      std::to_string(bound));

  std::vector<std::uint64_t> words((n_bits + 63) / 64, 0);
  for (std::uint64_t b = 0; b < n_bytes; ++b)
    words[b / 8] |= static_cast<std::uint64_t>(static_cast<std::uint8_t>(data[kHeaderBytes + b]))
                    << (8 * (b % 8));

  PrimeTable table = PrimeTable::from_odd_bits(bound, std::move(words));
  if (expected_count && table.count() != *expected_count)
    throw FormatError(path.string() + ": prime count checksum mismatch (file gives " +
                      std::to_string(table.count()) + ", expected " +
                      std::to_string(*expected_count) + ")");
  return table;
}

}  // namespace pdc
