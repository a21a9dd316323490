#include "permstat/permutation.hpp"

#include <charconv>
#include <numeric>
#include <sstream>

#include "permstat/error.hpp"

namespace permstat {

namespace {

void validate_bijection(const std::vector<Permutation::value_type>& values) {
  const std::size_t n = values.size();
  if (n == 0) throw ParseError("permutation is empty");
  std::vector<std::size_t> first_seen(n + 1, 0);
  for (std::size_t k = 0; k < n; ++k) {
    const auto v = values[k];
    if (v < 1 || v > n) {
      throw ParseError("value " + std::to_string(v) + " at position " + std::to_string(k + 1) +
                       " is outside [1, " + std::to_string(n) + "]");
    }
    if (first_seen[v] != 0) {
      throw ParseError("duplicate value " + std::to_string(v) + " at positions " +
                       std::to_string(first_seen[v]) + " and " + std::to_string(k + 1));
    }
    first_seen[v] = k + 1;
  }
}

}  // namespace

Permutation::Permutation(std::vector<value_type> one_line) : values_(std::move(one_line)) {
  validate_bijection(values_);
}

Permutation Permutation::identity(std::size_t n) {
  if (n == 0) throw DomainError("identity permutation needs n >= 1");
  std::vector<value_type> v(n);
  std::iota(v.begin(), v.end(), value_type{1});
  return Permutation(std::move(v), Unchecked{});
}

Permutation::value_type Permutation::at(std::size_t i) const {
  if (i < 1 || i > size()) {
    throw DomainError("index " + std::to_string(i) + " outside [1, " + std::to_string(size()) + "]");
  }
  return values_[i - 1];
}

Permutation Permutation::reversed() const {
  return Permutation(std::vector<value_type>(values_.rbegin(), values_.rend()), Unchecked{});
}

Permutation Permutation::complemented() const {
  const auto n1 = static_cast<value_type>(size() + 1);
  std::vector<value_type> v(values_);
  for (auto& x : v) x = n1 - x;
  return Permutation(std::move(v), Unchecked{});
}

Permutation Permutation::inverse() const {
  std::vector<value_type> v(size());
  for (std::size_t i = 0; i < size(); ++i) v[values_[i] - 1] = static_cast<value_type>(i + 1);
  return Permutation(std::move(v), Unchecked{});
}

std::string Permutation::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out << ' ';
    out << values_[i];
  }
  return out.str();
}

Permutation parse_permutation(std::string_view text) {
  std::vector<Permutation::value_type> values;
  std::size_t pos = 0;
  const auto is_sep = [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ',';
  };
  while (pos < text.size()) {
    if (is_sep(text[pos])) {
      ++pos;
      continue;
    }
    std::size_t end = pos;
    while (end < text.size() && !is_sep(text[end])) ++end;
    const std::string_view token = text.substr(pos, end - pos);
    unsigned long long value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw ParseError("invalid token '" + std::string(token) + "' at offset " + std::to_string(pos),
                       pos);
    }
    if (value > 0xffffffffULL) {
      throw ParseError("value " + std::string(token) + " at offset " + std::to_string(pos) +
                           " is too large",
                       pos);
    }
    values.push_back(static_cast<Permutation::value_type>(value));
    pos = end;
  }
  return Permutation(std::move(values));
}

}  // namespace permstat
