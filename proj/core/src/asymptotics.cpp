#include "permstat/asymptotics.hpp"

#include <cmath>
#include <string>

#include "permstat/error.hpp"

namespace permstat {

namespace {

long double ipow(long double base, unsigned exponent) {
  long double result = 1;
  for (unsigned k = 0; k < exponent; ++k) result *= base;
  return result;
}

// Weight multiplying the d-th tail term of the telescoped moment series.
long double moment_weight(LimitKind kind, unsigned a, std::uint64_t d) {
  const auto x = static_cast<long double>(d);
  if (kind == LimitKind::breadth) return ipow(x + 2, a) - ipow(x + 1, a);
  if (d == 0) return 1;  // 1^a - 0^a with the value-0 term absent, including a = 0
  return ipow(x + 1, a) - ipow(x, a);
}

long double tail_exponent(LimitKind kind, std::uint64_t d) {
  const auto x = static_cast<long double>(d);
  return kind == LimitKind::breadth ? -(x * x + x) : -2 * x;
}

}  // namespace

std::uint64_t lambda(std::uint64_t d) { return d * d + d; }

std::int64_t limit_floor(LimitKind kind) { return kind == LimitKind::breadth ? 2 : 1; }

double limit_tail(LimitKind kind, std::int64_t threshold) {
  const std::int64_t floor = limit_floor(kind);
  if (threshold <= floor) return 1.0;
  const auto d = static_cast<std::uint64_t>(threshold - floor);
  return static_cast<double>(std::exp(tail_exponent(kind, d)));
}

double limit_pmf(LimitKind kind, std::int64_t value) {
  if (value < limit_floor(kind)) return 0.0;
  return limit_tail(kind, value) - limit_tail(kind, value + 1);
}

std::map<std::int64_t, double> predicted_counts(std::uint64_t trials, LimitKind kind,
                                                std::int64_t max_value) {
  if (trials < 1) throw DomainError("predicted_counts requires trials >= 1");
  std::map<std::int64_t, double> counts;
  const auto t = static_cast<double>(trials);
  for (std::int64_t v = limit_floor(kind); v <= max_value; ++v) counts[v] = t * limit_pmf(kind, v);
  return counts;
}

double limit_moment(LimitKind kind, unsigned a, double tol) {
  if (!(tol > 0)) throw DomainError("limit_moment requires tol > 0");
  std::vector<long double> terms;
  for (std::uint64_t d = 0;; ++d) {
    const long double term = moment_weight(kind, a, d) * std::exp(tail_exponent(kind, d));
    terms.push_back(term);
    const long double next =
        moment_weight(kind, a, d + 1) * std::exp(tail_exponent(kind, d + 1));
    if (next == 0) break;
    // Term ratios are non-increasing in d, so with rho = next / term < 1 the
    // remainder after this term is at most next / (1 - rho).
    if (term > 0) {
      const long double rho = next / term;
      if (rho < 1 && next / (1 - rho) < tol) break;
    }
    if (d > 1000000) throw InternalError("limit_moment series failed to converge");
  }
  long double sum = 0;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) sum += *it;
  if (kind == LimitKind::breadth) sum += 1;
  return static_cast<double>(sum);
}

double truncated_exp(double lambda_value, unsigned r) {
  long double term = 1;
  long double sum = 1;
  for (unsigned m = 1; m <= r; ++m) {
    term *= -static_cast<long double>(lambda_value) / m;
    sum += term;
  }
  return static_cast<double>(sum);
}

double truncated_exp_remainder_bound(double lambda_value, unsigned r) {
  if (lambda_value == 0) return 0.0;
  const double log_bound = (r + 1) * std::log(std::fabs(lambda_value)) - std::lgamma(r + 2.0);
  return std::exp(log_bound);
}

unsigned prolific_truncation_depth(std::uint64_t d, std::uint64_t n) {
  if (n < 2) throw DomainError("prolific_truncation_depth requires n >= 2");
  const double log2n = std::log2(static_cast<double>(n));
  const auto by_n = static_cast<std::uint64_t>(std::ceil(log2n * log2n));
  return static_cast<unsigned>(std::max<std::uint64_t>(12 * d * d, by_n));
}

BigInt stirling2(unsigned a, unsigned k) {
  if (k > a) {
    throw DomainError("stirling2 requires k <= a, got a = " + std::to_string(a) +
                      ", k = " + std::to_string(k));
  }
  // row[j] holds S(i, j) for the current i.
  std::vector<BigInt> row(a + 1, 0);
  row[0] = 1;
  for (unsigned i = 1; i <= a; ++i) {
    for (unsigned j = i; j >= 1; --j) row[j] = j * row[j] + row[j - 1];
    row[0] = 0;
  }
  return row[k];
}

double ExpPolynomial::evaluate(double x) const {
  long double acc = 0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
    acc = acc * x + it->convert_to<long double>();
  }
  return static_cast<double>(acc);
}

ExpPolynomial exp_polynomial(unsigned a) {
  ExpPolynomial poly;
  poly.degree = a;
  poly.coefficients.reserve(a + 1);
  for (unsigned k = 0; k <= a; ++k) poly.coefficients.push_back(stirling2(a, k));
  return poly;
}

}  // namespace permstat
