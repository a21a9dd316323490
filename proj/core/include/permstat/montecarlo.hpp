#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "permstat/asymptotics.hpp"
#include "permstat/sampler.hpp"

namespace permstat {

enum class DistanceEngine { adaptive, naive };

struct TrialConfig {
  std::uint64_t n = 1000;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  // When set, also record the number of close-pair starters at this threshold.
  std::optional<std::uint64_t> d_probe;
  DistanceEngine engine = DistanceEngine::adaptive;
  // Trials are cut into blocks of this size; block b goes to worker b % workers.
  std::uint64_t block_size = 4096;
  // Refuse campaigns with n * trials above this.
  std::uint64_t budget = 100'000'000'000ULL;
};

using Histogram = std::map<std::uint64_t, std::uint64_t>;

struct ClosePairMoments {
  std::uint64_t d = 0;
  double mean = 0;
  double variance = 0;
  Histogram histogram;
};

struct TrialTimings {
  double sampling_seconds = 0;
  double breadth_seconds = 0;
  double minjump_seconds = 0;
  double closepair_seconds = 0;
  double wall_seconds = 0;
};

struct TrialReport {
  TrialConfig config;
  GeneratorMetadata generator;
  Histogram breadth_histogram;
  Histogram minjump_histogram;
  std::optional<ClosePairMoments> closepairs;
  TrialTimings timings;
};

// Samples config.trials uniform permutations of [n] and histograms d(pi) and
// mj(pi). Worker w draws from stream (seed, w) and handles blocks w, w + W, ...
// so the report is a pure function of (config) apart from timings.
TrialReport run_trials(const TrialConfig& config);

// Reads PERMSTAT_THREADS; returns `fallback` when unset or invalid.
unsigned workers_from_environment(unsigned fallback);

struct BucketComparison {
  std::int64_t value = 0;
  std::uint64_t observed = 0;
  double expected = 0;
  double probability = 0;
  // (observed - expected) / sqrt(trials p (1 - p)) when expected >= 10.
  // Below that, the normal deviate equivalent to the exact binomial tail.
  double z = 0;
  bool exact_binomial = false;
  // One-sided exact binomial tail in the direction of the deviation; only
  // set when exact_binomial.
  double tail_probability = 1;
};

struct ComparisonTable {
  LimitKind kind = LimitKind::breadth;
  std::uint64_t trials = 0;
  std::vector<BucketComparison> buckets;
  double max_abs_z = 0;
};

inline constexpr double kNormalApproximationMinExpected = 10.0;

// Buckets run from the law's floor to the larger of the largest observed value
// and the largest value whose expected count is at least one half.
ComparisonTable compare_histogram(const Histogram& observed, std::uint64_t trials, LimitKind kind);

struct PredictionComparison {
  ComparisonTable breadth;
  ComparisonTable minjump;
};

PredictionComparison compare_with_prediction(const TrialReport& report);

}  // namespace permstat
