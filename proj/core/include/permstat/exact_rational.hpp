#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace permstat {

using BigInt = boost::multiprecision::cpp_int;
// Always held in lowest terms with a positive denominator.
using ExactRational = boost::multiprecision::cpp_rational;

BigInt factorial(unsigned n);
// n (n-1) ... (n-k+1); zero when k > n.
BigInt falling_factorial(std::uint64_t n, std::uint64_t k);
BigInt binomial(std::int64_t n, std::int64_t k);

// "p/q", or "p" when q = 1.
std::string to_string(const ExactRational& value);
std::string to_string(const BigInt& value);
double to_double(const ExactRational& value);

}  // namespace permstat
