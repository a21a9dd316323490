#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "permstat/exact_rational.hpp"
#include "permstat/permutation.hpp"

namespace permstat {

enum class StatisticKind { breadth, minjump, closepairs };

// A permutation statistic selectable by name: "breadth" (d(pi)), "minjump"
// (mj(pi)), or "closepairs@D" (number of pairs at distance < D + 2).
struct Statistic {
  StatisticKind kind = StatisticKind::breadth;
  std::uint64_t d = 0;

  static Statistic breadth() { return {StatisticKind::breadth, 0}; }
  static Statistic minjump() { return {StatisticKind::minjump, 0}; }
  static Statistic closepairs(std::uint64_t d) { return {StatisticKind::closepairs, d}; }

  // Throws ParseError on unknown names.
  static Statistic parse(std::string_view name);
  std::string name() const;

  std::uint64_t evaluate(const Permutation& perm) const;
};

// Enumeration limits. n above `max_n` is refused; `max_n` itself may not be
// raised past kHardCap.
struct OracleLimits {
  static constexpr unsigned kDefaultCap = 11;
  static constexpr unsigned kHardCap = 12;

  unsigned max_n = kDefaultCap;
  // 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

struct ExactDistribution {
  unsigned n = 0;
  std::string statistic_name;
  std::map<std::uint64_t, BigInt> counts;
  BigInt total;

  ExactRational probability(std::uint64_t value) const;
  ExactRational tail(std::uint64_t threshold) const;
  ExactRational mean() const;
  ExactRational variance() const;
};

ExactDistribution enumerate_distribution(unsigned n, const Statistic& statistic,
                                         const OracleLimits& limits = {});

// Pr[statistic >= threshold] over uniform pi in S_n, exactly.
ExactRational exact_prob_ge(unsigned n, const Statistic& statistic, std::uint64_t threshold,
                            const OracleLimits& limits = {});

// Which indicator family X_i the binomial moments S_m are taken over.
//  breadth: X_i = 1 iff i is the first index of a pair at distance < d + 2.
//  minjump: X_i = 1 iff pi(i+1) - pi(i) is a non-zero integer of modulus <= d.
// The corresponding "no indicator fires" events are d(pi) >= d + 2 and
// mj(pi) >= d + 1 respectively.
enum class IndicatorFamily { breadth, minjump };

IndicatorFamily indicator_family(StatisticKind kind);

// Threshold at which Pr[all X_i = 0] is the tail of the statistic:
// d + 2 for breadth, d + 1 for minjump.
std::uint64_t prolific_threshold(IndicatorFamily family, std::uint64_t d);

// S_0 .. S_{n-1} by exhaustive enumeration: S_m = sum over m-subsets I of
// [n-1] of E[X_I]. Index m of the result is S_m.
std::vector<ExactRational> exact_Sm_table(unsigned n, std::uint64_t d, IndicatorFamily family,
                                          const OracleLimits& limits = {});

ExactRational exact_Sm(unsigned n, std::uint64_t d, unsigned m, IndicatorFamily family,
                       const OracleLimits& limits = {});

}  // namespace permstat
