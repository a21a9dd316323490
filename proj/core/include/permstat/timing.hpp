#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace permstat {

enum class DistanceAlgorithm { naive, banded, adaptive };

std::string_view algorithm_name(DistanceAlgorithm algo);
// Throws ParseError for unknown names.
DistanceAlgorithm parse_algorithm(std::string_view name);

struct BenchConfig {
  std::vector<std::uint64_t> n_list;
  std::vector<DistanceAlgorithm> algorithms{DistanceAlgorithm::adaptive};
  std::uint64_t seed = 0;
  // Random permutations (one generator stream each) timed per (algorithm, n).
  unsigned reps = 5;
  // Each permutation is re-run until at least this much time has passed.
  double min_seconds_per_rep = 0.002;
  // Refuse configurations whose naive cost sum n^2 * reps exceeds this.
  std::uint64_t budget = 50'000'000'000ULL;
};

struct BenchRow {
  DistanceAlgorithm algorithm = DistanceAlgorithm::adaptive;
  std::uint64_t n = 0;
  // Median over reps of the per-call time.
  double median_seconds = 0;
  std::vector<double> rep_seconds;
  // median(n) / median(previous n) when the previous entry of n_list is n / 2.
  std::optional<double> doubling_ratio;
};

// Times each algorithm on `reps` seeded permutations per n. Rep r uses
// stream r of `seed`, so every algorithm sees the same inputs.
std::vector<BenchRow> run_bench(const BenchConfig& config);

}  // namespace permstat
