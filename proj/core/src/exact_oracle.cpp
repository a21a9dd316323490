#include "permstat/exact_oracle.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>
#include <thread>

#include "permstat/error.hpp"
#include "permstat/statistics.hpp"

namespace permstat {

namespace {

void check_n(unsigned n, const OracleLimits& limits) {
  if (limits.max_n > OracleLimits::kHardCap) {
    throw BudgetExceeded("enumeration cap " + std::to_string(limits.max_n) +
                         " exceeds the hard cap " + std::to_string(OracleLimits::kHardCap));
  }
  if (n < 2) throw DomainError("exhaustive enumeration requires n >= 2, got " + std::to_string(n));
  if (n > limits.max_n) {
    throw BudgetExceeded("n = " + std::to_string(n) + " exceeds the enumeration cap " +
                         std::to_string(limits.max_n) + " (" + std::to_string(n) + "! permutations)");
  }
}

unsigned worker_count(unsigned n, const OracleLimits& limits) {
  unsigned threads = limits.threads ? limits.threads : std::thread::hardware_concurrency();
  return std::clamp(threads, 1u, n);
}

// Visits every permutation of [n] exactly once. S_n is partitioned by the first
// entry; worker w owns first entries w+1, w+1+W, ... and its own Accumulator.
// The accumulators are returned in worker order for a deterministic merge.
template <typename Accumulator, typename Visit>
std::vector<Accumulator> enumerate_partitioned(unsigned n, unsigned workers, const Accumulator& init,
                                               Visit visit) {
  std::vector<Accumulator> partial(workers, init);
  auto run = [&](unsigned w) {
    std::vector<std::uint32_t> values(n);
    for (unsigned first = w + 1; first <= n; first += workers) {
      values[0] = first;
      std::uint32_t next = 1;
      for (unsigned k = 1; k < n; ++k) {
        if (next == first) ++next;
        values[k] = next++;
      }
      do {
        visit(partial[w], std::span<const std::uint32_t>(values));
      } while (std::next_permutation(values.begin() + 1, values.end()));
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }
  return partial;
}

std::uint64_t evaluate_span(const Statistic& s, std::span<const std::uint32_t> v) {
  switch (s.kind) {
    case StatisticKind::breadth:
      // Ground truth: the quadratic definition, not the fast path it checks.
      return kernels::min_distance_naive(v);
    case StatisticKind::minjump:
      return kernels::min_jump(v);
    case StatisticKind::closepairs:
      return kernels::close_pair_count(v, s.d);
  }
  return 0;
}

std::size_t value_bound(unsigned n, const Statistic& s) {
  switch (s.kind) {
    case StatisticKind::breadth:
    case StatisticKind::minjump:
      return n + 2;
    case StatisticKind::closepairs:
      return static_cast<std::size_t>(n) * static_cast<std::size_t>(std::min<std::uint64_t>(s.d, n)) + 1;
  }
  return n + 2;
}

}  // namespace

Statistic Statistic::parse(std::string_view name) {
  if (name == "breadth") return breadth();
  if (name == "minjump") return minjump();
  constexpr std::string_view prefix = "closepairs@";
  if (name.substr(0, prefix.size()) == prefix) {
    const auto digits = name.substr(prefix.size());
    std::uint64_t d = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), d);
    if (ec == std::errc{} && ptr == digits.data() + digits.size() && !digits.empty()) {
      return closepairs(d);
    }
    throw ParseError("bad threshold in statistic '" + std::string(name) + "'", prefix.size());
  }
  throw ParseError("unknown statistic '" + std::string(name) +
                   "' (expected breadth, minjump or closepairs@D)");
}

std::string Statistic::name() const {
  switch (kind) {
    case StatisticKind::breadth:
      return "breadth";
    case StatisticKind::minjump:
      return "minjump";
    case StatisticKind::closepairs:
      return "closepairs@" + std::to_string(d);
  }
  return "?";
}

std::uint64_t Statistic::evaluate(const Permutation& perm) const {
  if (perm.size() < 2) throw DomainError("statistics require n >= 2");
  return evaluate_span(*this, perm.values());
}

ExactRational ExactDistribution::probability(std::uint64_t value) const {
  const auto it = counts.find(value);
  if (it == counts.end()) return 0;
  return ExactRational(it->second, total);
}

ExactRational ExactDistribution::tail(std::uint64_t threshold) const {
  BigInt hits = 0;
  for (auto it = counts.lower_bound(threshold); it != counts.end(); ++it) hits += it->second;
  return ExactRational(hits, total);
}

ExactRational ExactDistribution::mean() const {
  BigInt sum = 0;
  for (const auto& [value, count] : counts) sum += count * value;
  return ExactRational(sum, total);
}

ExactRational ExactDistribution::variance() const {
  BigInt sum_sq = 0;
  for (const auto& [value, count] : counts) sum_sq += count * value * value;
  const ExactRational mu = mean();
  return ExactRational(sum_sq, total) - mu * mu;
}

ExactDistribution enumerate_distribution(unsigned n, const Statistic& statistic,
                                         const OracleLimits& limits) {
  check_n(n, limits);
  const std::size_t bound = value_bound(n, statistic);
  auto partial = enumerate_partitioned(
      n, worker_count(n, limits), std::vector<std::uint64_t>(bound, 0),
      [&](std::vector<std::uint64_t>& hist, std::span<const std::uint32_t> v) {
        ++hist[evaluate_span(statistic, v)];
      });

  ExactDistribution dist;
  dist.n = n;
  dist.statistic_name = statistic.name();
  dist.total = factorial(n);
  for (std::size_t value = 0; value < bound; ++value) {
    std::uint64_t count = 0;
    for (const auto& hist : partial) count += hist[value];
    if (count) dist.counts[value] = count;
  }
  return dist;
}

ExactRational exact_prob_ge(unsigned n, const Statistic& statistic, std::uint64_t threshold,
                            const OracleLimits& limits) {
  return enumerate_distribution(n, statistic, limits).tail(threshold);
}

IndicatorFamily indicator_family(StatisticKind kind) {
  switch (kind) {
    case StatisticKind::breadth:
      return IndicatorFamily::breadth;
    case StatisticKind::minjump:
      return IndicatorFamily::minjump;
    case StatisticKind::closepairs:
      break;
  }
  throw DomainError("S_m is defined for the breadth and minjump indicator families only");
}

std::uint64_t prolific_threshold(IndicatorFamily family, std::uint64_t d) {
  return family == IndicatorFamily::breadth ? d + 2 : d + 1;
}

std::vector<ExactRational> exact_Sm_table(unsigned n, std::uint64_t d, IndicatorFamily family,
                                          const OracleLimits& limits) {
  check_n(n, limits);
  const unsigned slots = n - 1;
  const std::size_t masks = std::size_t{1} << slots;

  // mask_count[M] = number of permutations whose indicator vector is exactly M.
  auto partial = enumerate_partitioned(
      n, worker_count(n, limits), std::vector<std::uint64_t>(masks, 0),
      [&](std::vector<std::uint64_t>& hist, std::span<const std::uint32_t> v) {
        const auto mask = family == IndicatorFamily::breadth ? kernels::close_pair_starter_mask(v, d)
                                                             : kernels::jump_indicator_mask(v, d);
        ++hist[mask];
      });
  std::vector<std::uint64_t> at_least(masks, 0);
  for (const auto& hist : partial) {
    for (std::size_t mask = 0; mask < masks; ++mask) at_least[mask] += hist[mask];
  }
  // Superset sums: at_least[I] = #{pi : X_I(pi) = 1}.
  for (unsigned bit = 0; bit < slots; ++bit) {
    for (std::size_t mask = 0; mask < masks; ++mask) {
      if (!(mask >> bit & 1)) at_least[mask] += at_least[mask | (std::size_t{1} << bit)];
    }
  }

  const BigInt total = factorial(n);
  std::vector<ExactRational> table(n);
  table[0] = 1;
  for (unsigned m = 1; m < n; ++m) {
    BigInt sum = 0;
    // m-subsets of [n-1] in colexicographic order (Gosper's hack).
    std::size_t subset = (std::size_t{1} << m) - 1;
    while (subset < masks) {
      sum += at_least[subset];
      const std::size_t low = subset & (~subset + 1);
      const std::size_t ripple = subset + low;
      subset = (((ripple ^ subset) >> 2) / low) | ripple;
    }
    table[m] = ExactRational(sum, total);
  }
  return table;
}

ExactRational exact_Sm(unsigned n, std::uint64_t d, unsigned m, IndicatorFamily family,
                       const OracleLimits& limits) {
  check_n(n, limits);
  if (m > n - 1) {
    throw DomainError("m = " + std::to_string(m) + " outside [0, n-1] for n = " + std::to_string(n));
  }
  return exact_Sm_table(n, d, family, limits)[m];
}

}  // namespace permstat
