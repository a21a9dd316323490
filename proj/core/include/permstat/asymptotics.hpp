#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "permstat/exact_rational.hpp"

namespace permstat {

// Limit laws of the two statistics for uniform pi in S_n as n -> infinity.
//   breadth (Y): Pr[Y >= d + 2] = exp(-d^2 - d), d >= 0
//   minjump (Z): Pr[Z >= d + 1] = exp(-2d),      d >= 0
enum class LimitKind { breadth, minjump };

// lambda(d) = d^2 + d = 2 * C(d+1, 2), the limiting mean number of close-pair starters.
std::uint64_t lambda(std::uint64_t d);

// Smallest value the statistic can take: 2 for breadth, 1 for minjump.
std::int64_t limit_floor(LimitKind kind);

// Pr[limit variable >= threshold].
double limit_tail(LimitKind kind, std::int64_t threshold);
// Pr[limit variable == value].
double limit_pmf(LimitKind kind, std::int64_t value);

// Expected count per value floor..max_value for `trials` independent samples:
// trials * (tail(v) - tail(v+1)).
std::map<std::int64_t, double> predicted_counts(std::uint64_t trials, LimitKind kind,
                                                std::int64_t max_value);

// a-th moment of the limit law from the telescoped tail series
//   Y: 1 + sum_{d>=0} ((d+2)^a - (d+1)^a) e^{-d^2-d}
//   Z:     sum_{d>=0} ((d+1)^a - d^a)     e^{-2d}      (the d = 0 weight is 1)
// Summation stops once a geometric bound on the remainder drops below tol.
double limit_moment(LimitKind kind, unsigned a, double tol = 1e-18);

// sum_{m=0}^{r} (-lambda)^m / m!
double truncated_exp(double lambda_value, unsigned r);
// lambda^{r+1} / (r+1)!, the Taylor remainder bound for truncated_exp.
double truncated_exp_remainder_bound(double lambda_value, unsigned r);
// Truncation depth max(12 d^2, ceil(log2(n)^2)) used for the prolific bracket.
unsigned prolific_truncation_depth(std::uint64_t d, std::uint64_t n);

// Stirling number of the second kind S(a, k). Throws DomainError if k > a.
BigInt stirling2(unsigned a, unsigned k);

// b_a(x) with b_a(x) e^x = sum_{m>=0} m^a x^m / m!. coefficients[k] = S(a, k).
struct ExpPolynomial {
  unsigned degree = 0;
  std::vector<BigInt> coefficients;

  double evaluate(double x) const;
};

ExpPolynomial exp_polynomial(unsigned a);

}  // namespace permstat
