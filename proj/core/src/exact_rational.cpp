#include "permstat/exact_rational.hpp"

namespace permstat {

BigInt factorial(unsigned n) {
  BigInt result = 1;
  for (unsigned k = 2; k <= n; ++k) result *= k;
  return result;
}

BigInt falling_factorial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  BigInt result = 1;
  for (std::uint64_t j = 0; j < k; ++j) result *= (n - j);
  return result;
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (std::int64_t j = 1; j <= k; ++j) {
    result *= (n - k + j);
    result /= j;
  }
  return result;
}

std::string to_string(const BigInt& value) { return value.str(); }

std::string to_string(const ExactRational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const ExactRational& value) { return value.convert_to<double>(); }

}  // namespace permstat
