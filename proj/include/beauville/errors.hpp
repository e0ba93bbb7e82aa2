#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace beauville {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad argument or mismatched parameters (e.g. series over different primes).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Operation called on an object in the wrong state (e.g. incomplete coset table).
class StateError : public Error {
 public:
  using Error::Error;
};

/// Presentation text that does not conform to the grammar.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A configured resource ceiling was hit (coset count, element count, ...).
class LimitExceeded : public Error {
 public:
  LimitExceeded(const std::string& what, std::size_t high_water)
      : Error(what + " (high water " + std::to_string(high_water) + ")"), high_water_(high_water) {}

  std::size_t high_water() const noexcept { return high_water_; }

 private:
  std::size_t high_water_;
};

}  // namespace beauville
