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

#include "pdc/champions.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <numeric>
#include <string>

#include "pdc/counting.hpp"
#include "pdc/error.hpp"
#include "pdc/simd/kernels.hpp"
#include "pdc/singular.hpp"

namespace pdc {
namespace {

using Elements = std::vector<std::uint64_t>;

// Maximal sets plus the best `capacity` sets below the maximum.
class Leaderboard {
 public:
  explicit Leaderboard(std::size_t capacity) : capacity_(capacity) {}

  // Smallest count that could still change the final result. Candidates
  // whose upper bound is below this are safe to skip.
  std::uint64_t floor() const {
    if (winners_.empty()) return 1;
    if (capacity_ == 0) return max_;
    if (runners_.size() < capacity_) return 1;
    return runners_.back().first;
  }

  void offer(std::uint64_t count, Elements set) {
    if (count == 0) return;
    if (count > max_) {
      for (auto& w : winners_) add_runner(max_, std::move(w));
      winners_.clear();
      max_ = count;
    }
    if (count == max_) {
      winners_.push_back(std::move(set));
    } else {
      add_runner(count, std::move(set));
    }
  }

  void merge(Leaderboard&& other) {
    for (auto& w : other.winners_) offer(other.max_, std::move(w));
    for (auto& [c, s] : other.runners_) offer(c, std::move(s));
  }

  std::uint64_t max() const { return max_; }
  bool wants_count(std::uint64_t count) const { return count >= floor(); }

  void write(ChampionRecord& record) && {
    std::sort(winners_.begin(), winners_.end());
    record.max_count = max_;
    record.winners.clear();
    for (auto& w : winners_) record.winners.emplace_back(std::move(w));
    record.runners_up.clear();
    for (auto& [c, s] : runners_) record.runners_up.push_back({DifferenceSet(std::move(s)), c});
  }

 private:
  void add_runner(std::uint64_t count, Elements set) {
    if (capacity_ == 0) return;
    const auto before = [](const std::pair<std::uint64_t, Elements>& a,
                           const std::pair<std::uint64_t, Elements>& b) {
      return a.first != b.first ? a.first > b.first : a.second < b.second;
    };
    std::pair<std::uint64_t, Elements> entry{count, std::move(set)};
    if (runners_.size() == capacity_ && !before(entry, runners_.back())) return;
    runners_.insert(std::upper_bound(runners_.begin(), runners_.end(), entry, before),
                    std::move(entry));
    if (runners_.size() > capacity_) runners_.pop_back();
  }

  std::size_t capacity_;
  std::uint64_t max_ = 0;
  std::vector<Elements> winners_;
  std::vector<std::pair<std::uint64_t, Elements>> runners_;
};

std::size_t words_for(std::uint64_t n_bits) { return static_cast<std::size_t>((n_bits + 63) / 64); }

// prefix[w] = set bits in words [0, w).
void build_prefix(std::span<const std::uint64_t> words, std::vector<std::uint64_t>& prefix) {
  prefix.resize(words.size() + 1);
  prefix[0] = 0;
  for (std::size_t w = 0; w < words.size(); ++w)
    prefix[w + 1] = prefix[w] + static_cast<std::uint64_t>(std::popcount(words[w]));
}

std::uint64_t count_below(std::span<const std::uint64_t> words,
                          const std::vector<std::uint64_t>& prefix, std::uint64_t n_bits) {
  const std::size_t full = static_cast<std::size_t>(n_bits / 64);
  std::uint64_t total = prefix[full];
  if (const unsigned rem = n_bits % 64; rem != 0)
    total += static_cast<std::uint64_t>(std::popcount(words[full] & ((std::uint64_t{1} << rem) - 1)));
  return total;
}

// Branch-and-bound over sets of even differences, represented by their
// half-values ("shifts") drawn in increasing order from a candidate list.
// Node bitsets hold the positions i (odd numbers 2i + 1) where every chosen
// shift lands on a prime; the count below a position limit bounds every
// extension, and the limit only shrinks as the next shift grows.
class EvenSetSearch {
 public:
  using LeafFilter = std::function<bool(const Elements& shifts)>;

  EvenSetSearch(const PrimeTable& table, std::uint64_t x, unsigned k)
      : bits_(table.odd_bits()), last_(x >= 1 ? (x - 1) / 2 : 0), k_(k) {
    const std::size_t n = words_for(last_ + 1);
    build_prefix(bits_.first(n), root_prefix_);
  }

  std::uint64_t last_position() const { return last_; }

  struct Scratch {
    std::vector<std::vector<std::uint64_t>> nodes;
    std::vector<std::vector<std::uint64_t>> prefixes;
    Elements chosen;
  };

  Scratch make_scratch() const {
    Scratch s;
    s.nodes.resize(k_ + 1);
    s.prefixes.resize(k_ + 1);
    return s;
  }

  // Explores every set whose smallest shift is shifts[first].
  void run_from(const std::vector<std::uint64_t>& shifts, std::size_t first, Scratch& scratch,
                Leaderboard& board, const LeafFilter& accept) const {
    scratch.chosen.clear();
    descend(shifts, first, first + 1, 0, bits_, root_prefix_, scratch, board, accept);
  }

 private:
  void descend(const std::vector<std::uint64_t>& shifts, std::size_t begin, std::size_t end,
               unsigned level, std::span<const std::uint64_t> node,
               const std::vector<std::uint64_t>& prefix, Scratch& scratch, Leaderboard& board,
               const LeafFilter& accept) const {
    for (std::size_t idx = begin; idx < end; ++idx) {
      const std::uint64_t s = shifts[idx];
      if (s + 1 > last_) break;  // need position i >= 1 with i + s <= last
      const std::uint64_t n_bits = last_ - s + 1;
      if (count_below(node, prefix, n_bits) < board.floor()) break;

      scratch.chosen.push_back(s);
      if (level + 1 == k_) {
        if (!accept || accept(scratch.chosen)) {
          const std::uint64_t c = simd::and_shifted_popcount(node, bits_, s, n_bits);
          Elements set(scratch.chosen);
          for (auto& v : set) v *= 2;
          board.offer(c, std::move(set));
        }
      } else {
        auto& next = scratch.nodes[level + 1];
        auto& next_prefix = scratch.prefixes[level + 1];
        next.resize(words_for(n_bits));
        simd::and_shifted(next, node.first(next.size()), bits_, s);
        build_prefix(next, next_prefix);
        descend(shifts, idx + 1, shifts.size(), level + 1, next, next_prefix, scratch, board,
                accept);
      }
      scratch.chosen.pop_back();
    }
  }

  std::span<const std::uint64_t> bits_;
  std::uint64_t last_;  // index of the largest odd number <= x
  unsigned k_;
  std::vector<std::uint64_t> root_prefix_;
};

bool singular_vanishes(const Elements& even_set, unsigned k) {
  std::vector<std::int64_t> with0{0};
  for (const auto v : even_set) with0.push_back(static_cast<std::int64_t>(v));
  for (std::uint64_t p = 2; p <= k + 1; ++p)
    if (is_prime_u64(p) && residue_count(with0, p) == p) return true;
  return false;
}

// Calls f on the k-subsets of `pool` in lexicographic order until f
// returns false.
template <class F>
void for_each_combination(const Elements& pool, unsigned k, F&& f) {
  if (pool.size() < k) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    Elements set(k);
    for (unsigned i = 0; i < k; ++i) set[i] = pool[idx[i]];
    if (!f(std::move(set))) return;
    int i = static_cast<int>(k) - 1;
    while (i >= 0 && idx[i] == pool.size() - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (unsigned j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::uint64_t binomial_capped(std::uint64_t n, unsigned k, std::uint64_t cap) {
  if (k > n) return 0;
  long double v = 1;
  for (unsigned i = 0; i < k; ++i) {
    v = v * static_cast<long double>(n - i) / static_cast<long double>(i + 1);
    if (v > static_cast<long double>(cap)) return cap + 1;
  }
  return static_cast<std::uint64_t>(v + 0.5L);
}

// Sets of odd differences pair only with p = 2, so each counts exactly 1
// when every 2 + d_i is prime. They matter only when the leaderboard still
// admits a count of 1.
void offer_odd_sets(const PrimeTable& table, std::uint64_t x, unsigned k, std::size_t capacity,
                    Leaderboard& board) {
  if (!board.wants_count(1)) return;
  Elements pool;
  table.for_each_prime(3, x, [&](std::uint64_t q) { pool.push_back(q - 2); });
  constexpr std::uint64_t kMaxTies = 1000000;
  std::uint64_t budget = capacity;
  if (board.max() <= 1) {
    budget = binomial_capped(pool.size(), k, kMaxTies);
    if (budget > kMaxTies)
      throw ResourceError("more than " + std::to_string(kMaxTies) +
                          " tied champion sets with count 1");
  }
  for_each_combination(pool, k, [&](Elements set) {
    if (budget == 0) return false;
    --budget;
    board.offer(1, std::move(set));
    return true;
  });
}

void check_inputs(const PrimeTable& table, std::uint64_t x, unsigned k) {
  if (x > table.bound())
    throw RangeError("x = " + std::to_string(x) + " exceeds table bound " +
                     std::to_string(table.bound()));
  if (k == 0) throw DomainError("tuple size k must be positive");
  const std::uint64_t pi_x = x >= 2 ? table.pi(x) : 0;
  if (pi_x < std::uint64_t{k} + 1)
    throw InsufficientPrimesError("need at least " + std::to_string(k + 1) +
                                  " primes <= x, pi(" + std::to_string(x) +
                                  ") = " + std::to_string(pi_x));
}

void finish(ChampionRecord& record) {
  record.winners_below_half_x = std::all_of(
      record.winners.begin(), record.winners.end(),
      [&](const DifferenceSet& d) { return 2 * d.largest() < record.x; });
}

ChampionRecord pair_champion(const PrimeTable& table, std::uint64_t x, const PdcOptions& options) {
  const PairHistogram h = pair_difference_histogram(table, x, x - 1, options.parallelism);
  Leaderboard board(options.runners_up);
  for (std::uint64_t d = 1; d < x; ++d) board.offer(h.counts[d], Elements{d});
  ChampionRecord record;
  record.x = x;
  record.k = 1;
  record.mode = SearchMode::exhaustive;
  record.search_space = "all d in [1, x-1] via the pair-difference histogram";
  std::move(board).write(record);
  finish(record);
  return record;
}

std::vector<std::uint64_t> primorial_multiples(std::uint64_t x, unsigned multiplier_max) {
  std::vector<std::uint64_t> out;
  std::uint64_t primorial = 1;
  for (std::uint64_t p = 2; p <= x; ++p) {
    if (!is_prime_u64(p)) continue;
    if (primorial > x / p) break;
    primorial *= p;
    for (std::uint64_t m = 1; m <= multiplier_max && m * primorial <= x; ++m)
      out.push_back(m * primorial);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::string_view mode_name(SearchMode mode) {
  return mode == SearchMode::exhaustive ? "exhaustive" : "pruned";
}

SearchMode parse_mode(std::string_view name) {
  if (name == "exhaustive") return SearchMode::exhaustive;
  if (name == "pruned") return SearchMode::pruned;
  throw DomainError("unknown search mode '" + std::string(name) + "'");
}

std::uint64_t ExhaustiveLimits::for_k(unsigned k) const {
  switch (k) {
    case 1: return std::numeric_limits<std::uint64_t>::max();
    case 2: return max_x_k2;
    case 3: return max_x_k3;
    default: return max_x_k4_plus;
  }
}

ChampionRecord jumping_champion(const PrimeTable& table, std::uint64_t x,
                                std::size_t runners_up) {
  const GapHistogram h = gap_histogram(table, x);
  Leaderboard board(runners_up);
  for (const auto& [gap, n] : h.counts) board.offer(n, Elements{gap});
  ChampionRecord record;
  record.x = x;
  record.k = 1;
  record.mode = SearchMode::exhaustive;
  record.search_space = "gaps between consecutive primes <= x";
  std::move(board).write(record);
  finish(record);
  return record;
}

ChampionRecord find_pdc(const PrimeTable& table, std::uint64_t x, unsigned k,
                        const PdcOptions& options) {
  check_inputs(table, x, k);
  if (k == 1) return pair_champion(table, x, options);

  const bool exhaustive = options.mode == SearchMode::exhaustive;
  if (exhaustive && x > options.limits.for_k(k))
    throw RangeError("exhaustive search for k = " + std::to_string(k) + " is limited to x <= " +
                     std::to_string(options.limits.for_k(k)) + "; use pruned mode");

  const EvenSetSearch search(table, x, k);
  const unsigned workers = options.parallelism.resolved();
  std::vector<Leaderboard> boards(workers, Leaderboard(options.runners_up));
  std::vector<EvenSetSearch::Scratch> scratch;
  for (unsigned w = 0; w < workers; ++w) scratch.push_back(search.make_scratch());

  ChampionRecord record;
  record.x = x;
  record.k = k;
  record.mode = options.mode;

  if (exhaustive) {
    std::vector<std::uint64_t> shifts;
    for (std::uint64_t s = 1; s + 1 <= search.last_position(); ++s) shifts.push_back(s);
    parallel_for(shifts.size(), options.parallelism, [&](std::size_t first, unsigned w) {
      search.run_from(shifts, first, scratch[w], boards[w], {});
    });
    record.search_space = "all D with 1 <= d_1 < ... < d_k < x";
  } else {
    const unsigned bound = options.pattern_bound ? options.pattern_bound : 12 * k;
    const auto bases = primorial_multiples(x, options.multiplier_max);
    struct Task {
      std::size_t base;
      std::size_t first;
    };
    std::vector<std::vector<std::uint64_t>> shift_lists;
    std::vector<Task> tasks;
    for (std::size_t b = 0; b < bases.size(); ++b) {
      std::vector<std::uint64_t> shifts;
      for (std::uint64_t r = 1; r <= bound; ++r) {
        const std::uint64_t s = bases[b] * r / 2;
        if (s + 1 > search.last_position()) break;
        shifts.push_back(s);
      }
      for (std::size_t f = 0; f < shifts.size(); ++f) tasks.push_back({b, f});
      shift_lists.push_back(std::move(shifts));
    }
    parallel_for(tasks.size(), options.parallelism, [&](std::size_t t, unsigned w) {
      const std::uint64_t base = bases[tasks[t].base];
      const auto accept = [&](const Elements& chosen) {
        std::uint64_t g = 0;
        Elements set;
        for (const auto s : chosen) {
          g = std::gcd(g, 2 * s / base);
          set.push_back(2 * s);
        }
        return g == 1 && !singular_vanishes(set, k);
      };
      search.run_from(shift_lists[tasks[t].base], tasks[t].first, scratch[w], boards[w], accept);
    });
    record.search_space = "D = d * D', d = m * p_n# <= x with 1 <= m <= " +
                          std::to_string(options.multiplier_max) + ", D' subset of {1.." +
                          std::to_string(bound) + "} with gcd 1, singular series nonzero";
  }

  Leaderboard merged(options.runners_up);
  for (auto& b : boards) merged.merge(std::move(b));
  if (exhaustive) offer_odd_sets(table, x, k, options.runners_up, merged);
  std::move(merged).write(record);
  finish(record);
  return record;
}

std::vector<ChampionRecord> champion_scan(const PrimeTable& table,
                                          const std::vector<std::uint64_t>& x_grid, unsigned k,
                                          const PdcOptions& options) {
  for (std::size_t i = 1; i < x_grid.size(); ++i)
    if (x_grid[i] <= x_grid[i - 1]) throw RangeError("x grid must be strictly ascending");
  std::vector<ChampionRecord> out;
  out.reserve(x_grid.size());
  for (const std::uint64_t x : x_grid) out.push_back(find_pdc(table, x, k, options));
  return out;
}

}  // namespace pdc
