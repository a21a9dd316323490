#include "permstat/timing.hpp"

#include <algorithm>
#include <chrono>
#include <string>

#include "permstat/error.hpp"
#include "permstat/sampler.hpp"
#include "permstat/statistics.hpp"

namespace permstat {

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t run_once(DistanceAlgorithm algo, std::span<const std::uint32_t> values, std::uint64_t window) {
  switch (algo) {
    case DistanceAlgorithm::naive:
      return kernels::min_distance_naive(values);
    case DistanceAlgorithm::banded:
      return kernels::min_distance_banded(values, window);
    case DistanceAlgorithm::adaptive:
      return kernels::min_distance_adaptive(values);
  }
  return 0;
}

double time_per_call(DistanceAlgorithm algo, std::span<const std::uint32_t> values, double min_seconds) {
  const std::uint64_t window = breadth_band_limit(values.size()) + 1;
  volatile std::uint64_t sink = run_once(algo, values, window);  // untimed warm-up
  std::uint64_t calls = 0;
  const auto start = Clock::now();
  double elapsed = 0;
  do {
    sink = sink + run_once(algo, values, window);
    ++calls;
    elapsed = std::chrono::duration<double>(Clock::now() - start).count();
  } while (elapsed < min_seconds);
  return elapsed / static_cast<double>(calls);
}

double median(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  const std::size_t k = xs.size();
  return k % 2 ? xs[k / 2] : 0.5 * (xs[k / 2 - 1] + xs[k / 2]);
}

}  // namespace

std::string_view algorithm_name(DistanceAlgorithm algo) {
  switch (algo) {
    case DistanceAlgorithm::naive:
      return "naive";
    case DistanceAlgorithm::banded:
      return "banded";
    case DistanceAlgorithm::adaptive:
      return "adaptive";
  }
  return "?";
}

DistanceAlgorithm parse_algorithm(std::string_view name) {
  if (name == "naive") return DistanceAlgorithm::naive;
  if (name == "banded") return DistanceAlgorithm::banded;
  if (name == "adaptive") return DistanceAlgorithm::adaptive;
  throw ParseError("unknown algorithm '" + std::string(name) + "' (expected naive, banded or adaptive)");
}

std::vector<BenchRow> run_bench(const BenchConfig& config) {
  if (config.reps < 1) throw DomainError("bench requires reps >= 1");
  std::uint64_t cost = 0;
  for (auto n : config.n_list) {
    if (n < 2) throw DomainError("bench requires every n >= 2");
    if (n > 0xffffffffULL) throw DomainError("n too large");
    const bool quadratic = std::find(config.algorithms.begin(), config.algorithms.end(),
                                     DistanceAlgorithm::naive) != config.algorithms.end();
    cost += (quadratic ? n * n / 2 : n) * config.reps;
  }
  if (cost > config.budget) {
    throw BudgetExceeded("bench work estimate " + std::to_string(cost) + " exceeds budget " +
                         std::to_string(config.budget));
  }

  std::vector<BenchRow> rows;
  for (const auto algo : config.algorithms) {
    std::optional<std::uint64_t> previous_n;
    double previous_median = 0;
    for (const auto n : config.n_list) {
      BenchRow row;
      row.algorithm = algo;
      row.n = n;
      for (unsigned r = 0; r < config.reps; ++r) {
        SeededGenerator gen(config.seed, r);
        std::vector<std::uint32_t> values(n);
        sample_permutation_into(values, gen);
        row.rep_seconds.push_back(time_per_call(algo, values, config.min_seconds_per_rep));
      }
      row.median_seconds = median(row.rep_seconds);
      if (previous_n && *previous_n * 2 == n && previous_median > 0) {
        row.doubling_ratio = row.median_seconds / previous_median;
      }
      previous_n = n;
      previous_median = row.median_seconds;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace permstat
