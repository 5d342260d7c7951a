#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace coreflect {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class AlgebraMismatch : public Error {
 public:
  using Error::Error;
};

class NotIdempotent : public Error {
 public:
  using Error::Error;
};

class NotFiniteDimensionalAtBound : public Error {
 public:
  using Error::Error;
};

class ExhaustiveBoundExceeded : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. This always indicates a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// Malformed input text. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error(line ? what + " (line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ")"
                   : what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace coreflect
