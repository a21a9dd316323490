#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace permstat {

// A permutation of [n] stored in one-line notation. All public accessors are
// 1-based: `(*this)(i)` is pi(i) for 1 <= i <= n.
class Permutation {
 public:
  using value_type = std::uint32_t;

  // Validates that `one_line` is a bijection on [n]; throws ParseError naming
  // the first duplicated or missing value otherwise.
  explicit Permutation(std::vector<value_type> one_line);

  // Skips validation; the caller guarantees `one_line` is a bijection on [n].
  static Permutation from_trusted(std::vector<value_type> one_line) {
    return Permutation(std::move(one_line), Unchecked{});
  }

  static Permutation identity(std::size_t n);

  std::size_t size() const noexcept { return values_.size(); }

  // pi(i), 1-based. Unchecked.
  value_type operator()(std::size_t i) const noexcept { return values_[i - 1]; }

  // pi(i), 1-based. Throws DomainError when i is outside [1, n].
  value_type at(std::size_t i) const;

  // Raw one-line values pi(1)..pi(n).
  std::span<const value_type> values() const noexcept { return values_; }

  Permutation reversed() const;
  Permutation complemented() const;
  Permutation inverse() const;

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<value_type> one_line, Unchecked) : values_(std::move(one_line)) {}

  std::vector<value_type> values_;
};

// Parses whitespace- or comma-separated 1-based values, e.g. "1 4 7 2 5 8 3 6 9".
// Errors carry the character offset of the offending token.
Permutation parse_permutation(std::string_view text);

}  // namespace permstat
