#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "permstat/permutation.hpp"

namespace permstat {

// L1 distance between the dots (i, pi(i)) and (j, pi(j)); 1-based, i != j.
std::uint64_t manhattan_distance(const Permutation& perm, std::size_t i, std::size_t j);

// Minimum Manhattan distance d(pi) over all C(n,2) pairs. O(n^2). Requires n >= 2.
std::uint64_t min_distance_naive(const Permutation& perm);

// Largest y >= 0 with y^2/2 + 2y + 1 <= n. Every pi in S_n has d(pi) <= y + 2.
std::uint64_t breadth_band_limit(std::uint64_t n);

// Minimum distance over pairs whose horizontal gap j - i lies in [1, window].
// Equals d(pi) whenever window >= d(pi) - 1.
std::uint64_t min_distance_banded(const Permutation& perm, std::uint64_t window);

// mj(pi) = min |pi(i+1) - pi(i)|. Requires n >= 2.
std::uint64_t min_jump(const Permutation& perm);

// d(pi) in expected O(n) time for uniform pi: one pass for mj(pi), then a
// banded scan with window max(1, min(y + 1, mj(pi))). Safe since d <= mj + 1.
std::uint64_t min_distance_adaptive(const Permutation& perm);

struct ClosePairReport {
  std::uint64_t d = 0;
  // 1-based (i, j), i < j, with distance < d + 2, in lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  // starters[i - 1] is X_i for i in [1, n-1].
  std::vector<bool> starters;

  bool empty() const noexcept { return pairs.empty(); }
  std::size_t starter_count() const noexcept;
};

// All close pairs at threshold d. Empty iff pi is d-prolific, i.e. d(pi) >= d + 2.
ClosePairReport close_pairs(const Permutation& perm, std::uint64_t d);

// Span-based kernels for hot loops. The caller guarantees `values` is a valid
// one-line permutation with at least two entries; nothing is checked.
namespace kernels {

std::uint64_t min_distance_naive(std::span<const std::uint32_t> values) noexcept;
std::uint64_t min_distance_banded(std::span<const std::uint32_t> values,
                                  std::uint64_t window) noexcept;
std::uint64_t min_jump(std::span<const std::uint32_t> values) noexcept;
std::uint64_t min_distance_adaptive(std::span<const std::uint32_t> values) noexcept;

// Number of indices i in [1, n-1] that start a close pair at threshold d.
std::uint64_t close_pair_starter_count(std::span<const std::uint32_t> values,
                                       std::uint64_t d) noexcept;
// Number of pairs i < j with distance < d + 2.
std::uint64_t close_pair_count(std::span<const std::uint32_t> values, std::uint64_t d) noexcept;

// Bitmask of starter indicators: bit (i-1) set iff X_i = 1. Requires n <= 65.
std::uint64_t close_pair_starter_mask(std::span<const std::uint32_t> values,
                                      std::uint64_t d) noexcept;
// Bitmask of jump indicators: bit (i-1) set iff 0 < |pi(i+1) - pi(i)| <= d. Requires n <= 65.
std::uint64_t jump_indicator_mask(std::span<const std::uint32_t> values, std::uint64_t d) noexcept;

}  // namespace kernels

}  // namespace permstat
