#include "permstat/montecarlo.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <string>
#include <thread>

#include <boost/math/distributions/binomial.hpp>
#include <boost/math/distributions/normal.hpp>

#include "permstat/error.hpp"
#include "permstat/statistics.hpp"

namespace permstat {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct WorkerResult {
  Histogram breadth;
  Histogram minjump;
  Histogram closepairs;
  TrialTimings timings;
};

WorkerResult run_worker(const TrialConfig& config, unsigned worker) {
  WorkerResult result;
  SeededGenerator gen(config.seed, worker);
  std::vector<std::uint32_t> values(config.n);
  const std::uint64_t blocks = (config.trials + config.block_size - 1) / config.block_size;
  // Dense local histograms; d(pi) <= n and mj(pi) <= n - 1.
  std::vector<std::uint64_t> breadth(config.n + 2, 0);
  std::vector<std::uint64_t> minjump(config.n + 1, 0);
  std::vector<std::uint64_t> closepairs(config.n + 1, 0);

  for (std::uint64_t block = worker; block < blocks; block += config.workers) {
    const std::uint64_t begin = block * config.block_size;
    const std::uint64_t end = std::min(config.trials, begin + config.block_size);
    for (std::uint64_t t = begin; t < end; ++t) {
      auto start = Clock::now();
      sample_permutation_into(values, gen);
      auto mid = Clock::now();
      result.timings.sampling_seconds += std::chrono::duration<double>(mid - start).count();

      start = mid;
      const std::uint64_t mj = kernels::min_jump(values);
      mid = Clock::now();
      result.timings.minjump_seconds += std::chrono::duration<double>(mid - start).count();
      ++minjump[mj];

      start = mid;
      const std::uint64_t dist = config.engine == DistanceEngine::adaptive
                                     ? kernels::min_distance_adaptive(values)
                                     : kernels::min_distance_naive(values);
      mid = Clock::now();
      result.timings.breadth_seconds += std::chrono::duration<double>(mid - start).count();
      ++breadth[dist];

      if (config.d_probe) {
        start = mid;
        ++closepairs[kernels::close_pair_starter_count(values, *config.d_probe)];
        result.timings.closepair_seconds += seconds_since(start);
      }
    }
  }
  for (std::size_t v = 0; v < breadth.size(); ++v) {
    if (breadth[v]) result.breadth[v] = breadth[v];
  }
  for (std::size_t v = 0; v < minjump.size(); ++v) {
    if (minjump[v]) result.minjump[v] = minjump[v];
  }
  for (std::size_t v = 0; v < closepairs.size(); ++v) {
    if (closepairs[v]) result.closepairs[v] = closepairs[v];
  }
  return result;
}

void merge_into(Histogram& into, const Histogram& from) {
  for (const auto& [value, count] : from) into[value] += count;
}

// Normal deviate whose upper tail equals p, clamped away from 0 and 1.
double equivalent_deviate(double p) {
  static const boost::math::normal_distribution<double> unit;
  p = std::clamp(p, 1e-300, 1.0);
  if (p >= 0.5) return 0.0;
  return boost::math::quantile(boost::math::complement(unit, p));
}

}  // namespace

unsigned workers_from_environment(unsigned fallback) {
  const char* raw = std::getenv("PERMSTAT_THREADS");
  if (!raw || !*raw) return fallback;
  char* end = nullptr;
  const unsigned long value = std::strtoul(raw, &end, 10);
  if (*end != '\0' || value == 0 || value > 4096) return fallback;
  return static_cast<unsigned>(value);
}

TrialReport run_trials(const TrialConfig& config) {
  if (config.n < 2) throw DomainError("run_trials requires n >= 2");
  if (config.trials < 1) throw DomainError("run_trials requires trials >= 1");
  if (config.workers < 1) throw DomainError("run_trials requires workers >= 1");
  if (config.block_size < 1) throw DomainError("run_trials requires block_size >= 1");
  if (config.n > 0xffffffffULL) throw DomainError("n too large");
  if (config.trials > config.budget / config.n) {
    throw BudgetExceeded("n * trials = " + std::to_string(config.n) + " * " + std::to_string(config.trials) +
                         " exceeds budget " + std::to_string(config.budget));
  }

  const auto start = Clock::now();
  std::vector<WorkerResult> results(config.workers);
  if (config.workers == 1) {
    results[0] = run_worker(config, 0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(config.workers);
    for (unsigned w = 0; w < config.workers; ++w) {
      pool.emplace_back([&, w] { results[w] = run_worker(config, w); });
    }
  }

  TrialReport report;
  report.config = config;
  report.generator = {std::string(SeededGenerator::kAlgorithmId), config.seed, config.workers};
  Histogram closepairs;
  for (const auto& r : results) {
    merge_into(report.breadth_histogram, r.breadth);
    merge_into(report.minjump_histogram, r.minjump);
    merge_into(closepairs, r.closepairs);
    report.timings.sampling_seconds += r.timings.sampling_seconds;
    report.timings.breadth_seconds += r.timings.breadth_seconds;
    report.timings.minjump_seconds += r.timings.minjump_seconds;
    report.timings.closepair_seconds += r.timings.closepair_seconds;
  }
  if (config.d_probe) {
    ClosePairMoments moments;
    moments.d = *config.d_probe;
    const auto t = static_cast<double>(config.trials);
    double sum = 0;
    for (const auto& [value, count] : closepairs) sum += static_cast<double>(value) * static_cast<double>(count);
    moments.mean = sum / t;
    double sq = 0;
    for (const auto& [value, count] : closepairs) {
      const double dev = static_cast<double>(value) - moments.mean;
      sq += dev * dev * static_cast<double>(count);
    }
    moments.variance = config.trials > 1 ? sq / (t - 1) : 0.0;
    moments.histogram = std::move(closepairs);
    report.closepairs = std::move(moments);
  }
  report.timings.wall_seconds = seconds_since(start);
  return report;
}

ComparisonTable compare_histogram(const Histogram& observed, std::uint64_t trials, LimitKind kind) {
  if (trials < 1) throw DomainError("compare_histogram requires trials >= 1");
  ComparisonTable table;
  table.kind = kind;
  table.trials = trials;
  const auto t = static_cast<double>(trials);
  const std::int64_t floor = limit_floor(kind);
  std::int64_t last = floor;
  if (!observed.empty()) last = std::max<std::int64_t>(last, static_cast<std::int64_t>(observed.rbegin()->first));
  while (t * limit_pmf(kind, last + 1) >= 0.5) ++last;

  for (std::int64_t v = floor; v <= last; ++v) {
    BucketComparison b;
    b.value = v;
    const auto it = observed.find(static_cast<std::uint64_t>(v));
    b.observed = it == observed.end() ? 0 : it->second;
    b.probability = limit_pmf(kind, v);
    b.expected = t * b.probability;
    const double obs = static_cast<double>(b.observed);
    if (b.expected >= kNormalApproximationMinExpected) {
      const double sd = std::sqrt(t * b.probability * (1 - b.probability));
      b.z = (obs - b.expected) / sd;
    } else {
      b.exact_binomial = true;
      if (b.probability <= 0) {
        b.tail_probability = b.observed == 0 ? 1.0 : 0.0;
        b.z = b.observed == 0 ? 0.0 : equivalent_deviate(0.0);
      } else {
        const boost::math::binomial_distribution<double> law(t, b.probability);
        if (obs >= b.expected) {
          b.tail_probability = b.observed == 0 ? 1.0 : boost::math::cdf(boost::math::complement(law, obs - 1));
          b.z = equivalent_deviate(b.tail_probability);
        } else {
          b.tail_probability = boost::math::cdf(law, obs);
          b.z = -equivalent_deviate(b.tail_probability);
        }
      }
    }
    table.max_abs_z = std::max(table.max_abs_z, std::fabs(b.z));
    table.buckets.push_back(b);
  }
  return table;
}

PredictionComparison compare_with_prediction(const TrialReport& report) {
  return {compare_histogram(report.breadth_histogram, report.config.trials, LimitKind::breadth),
          compare_histogram(report.minjump_histogram, report.config.trials, LimitKind::minjump)};
}

}  // namespace permstat
