#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace permstat {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on an argument was violated (index out of range, n too small, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Malformed textual input. `position` is the 0-based character offset where
// the problem was detected, or npos when it refers to the input as a whole.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position = std::string::npos)
      : Error(what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// A computation would exceed its configured enumeration or resource budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// An internal invariant failed, e.g. two algorithms disagreed.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace permstat
