#include "permstat/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "permstat/error.hpp"

namespace permstat {

namespace {

// Branch-free: on random input a compare-and-branch mispredicts half the time,
// and a predictor that has memorised a short input skews small-n timings.
inline std::uint32_t absdiff(std::uint32_t a, std::uint32_t b) noexcept {
  return std::max(a, b) - std::min(a, b);
}

// y^2/2 + 2y + 1 <= n  <=>  (y + 2)^2 <= 2n + 2
std::uint64_t band_limit(std::uint64_t n) noexcept {
  const std::uint64_t target = 2 * n + 2;
  auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(target)));
  while (root * root > target) --root;
  while ((root + 1) * (root + 1) <= target) ++root;
  return root >= 2 ? root - 2 : 0;
}

void require_pairs(const Permutation& perm, const char* what) {
  if (perm.size() < 2) {
    throw DomainError(std::string(what) + " requires n >= 2, got n = " + std::to_string(perm.size()));
  }
}

}  // namespace

namespace kernels {

std::uint64_t min_distance_naive(std::span<const std::uint32_t> v) noexcept {
  const std::size_t n = v.size();
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      best = std::min<std::uint64_t>(best, (j - i) + absdiff(v[i], v[j]));
    }
  }
  return best;
}

std::uint64_t min_distance_banded(std::span<const std::uint32_t> v, std::uint64_t window) noexcept {
  const std::size_t n = v.size();
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const std::size_t last = static_cast<std::size_t>(std::min<std::uint64_t>(n - 1, i + window));
    for (std::size_t j = i + 1; j <= last; ++j) {
      const std::uint64_t gap = j - i;
      // Every remaining pair in this row has distance > gap >= best.
      if (gap >= best) break;
      best = std::min(best, gap + absdiff(v[i], v[j]));
    }
  }
  return best;
}

std::uint64_t min_jump(std::span<const std::uint32_t> v) noexcept {
  std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
  for (std::size_t i = 0; i + 1 < v.size(); ++i) best = std::min(best, absdiff(v[i], v[i + 1]));
  return best;
}

std::uint64_t min_distance_adaptive(std::span<const std::uint32_t> v) noexcept {
  const std::uint64_t mj = min_jump(v);
  if (mj == 1) return 2;
  const std::uint64_t window = std::max<std::uint64_t>(1, std::min(band_limit(v.size()) + 1, mj));
  return min_distance_banded(v, window);
}

std::uint64_t close_pair_starter_count(std::span<const std::uint32_t> v, std::uint64_t d) noexcept {
  const std::size_t n = v.size();
  std::uint64_t count = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    // gap + |value difference| <= d + 1 with a value difference of at least 1.
    const std::size_t last = static_cast<std::size_t>(std::min<std::uint64_t>(n - 1, i + d));
    for (std::size_t j = i + 1; j <= last; ++j) {
      if ((j - i) + absdiff(v[i], v[j]) <= d + 1) {
        ++count;
        break;
      }
    }
  }
  return count;
}

std::uint64_t close_pair_count(std::span<const std::uint32_t> v, std::uint64_t d) noexcept {
  const std::size_t n = v.size();
  std::uint64_t count = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const std::size_t last = static_cast<std::size_t>(std::min<std::uint64_t>(n - 1, i + d));
    for (std::size_t j = i + 1; j <= last; ++j) {
      if ((j - i) + absdiff(v[i], v[j]) <= d + 1) ++count;
    }
  }
  return count;
}

std::uint64_t close_pair_starter_mask(std::span<const std::uint32_t> v, std::uint64_t d) noexcept {
  const std::size_t n = v.size();
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const std::size_t last = static_cast<std::size_t>(std::min<std::uint64_t>(n - 1, i + d));
    for (std::size_t j = i + 1; j <= last; ++j) {
      if ((j - i) + absdiff(v[i], v[j]) <= d + 1) {
        mask |= std::uint64_t{1} << i;
        break;
      }
    }
  }
  return mask;
}

std::uint64_t jump_indicator_mask(std::span<const std::uint32_t> v, std::uint64_t d) noexcept {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    if (absdiff(v[i], v[i + 1]) <= d) mask |= std::uint64_t{1} << i;
  }
  return mask;
}

}  // namespace kernels

std::uint64_t manhattan_distance(const Permutation& perm, std::size_t i, std::size_t j) {
  if (i == j) throw DomainError("manhattan_distance needs distinct indices, got i = j = " + std::to_string(i));
  const auto a = perm.at(i);
  const auto b = perm.at(j);
  return (i > j ? i - j : j - i) + absdiff(a, b);
}

std::uint64_t min_distance_naive(const Permutation& perm) {
  require_pairs(perm, "min_distance_naive");
  return kernels::min_distance_naive(perm.values());
}

std::uint64_t breadth_band_limit(std::uint64_t n) {
  if (n < 2) throw DomainError("breadth_band_limit requires n >= 2, got n = " + std::to_string(n));
  return band_limit(n);
}

std::uint64_t min_distance_banded(const Permutation& perm, std::uint64_t window) {
  require_pairs(perm, "min_distance_banded");
  if (window < 1) throw DomainError("min_distance_banded requires window >= 1");
  const auto best = kernels::min_distance_banded(perm.values(), window);
  if (best == std::numeric_limits<std::uint64_t>::max()) {
    throw InternalError("min_distance_banded found no qualifying pair");
  }
  return best;
}

std::uint64_t min_jump(const Permutation& perm) {
  require_pairs(perm, "min_jump");
  return kernels::min_jump(perm.values());
}

std::uint64_t min_distance_adaptive(const Permutation& perm) {
  require_pairs(perm, "min_distance_adaptive");
  return kernels::min_distance_adaptive(perm.values());
}

std::size_t ClosePairReport::starter_count() const noexcept {
  return static_cast<std::size_t>(std::count(starters.begin(), starters.end(), true));
}

ClosePairReport close_pairs(const Permutation& perm, std::uint64_t d) {
  require_pairs(perm, "close_pairs");
  const auto v = perm.values();
  const std::size_t n = v.size();
  ClosePairReport report;
  report.d = d;
  report.starters.assign(n - 1, false);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const std::size_t last = static_cast<std::size_t>(std::min<std::uint64_t>(n - 1, i + d));
    for (std::size_t j = i + 1; j <= last; ++j) {
      if ((j - i) + absdiff(v[i], v[j]) <= d + 1) {
        report.pairs.emplace_back(i + 1, j + 1);
        report.starters[i] = true;
      }
    }
  }
  return report;
}

}  // namespace permstat
