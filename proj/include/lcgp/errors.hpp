#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lcgp {

/// Shapes, ranks or generator counts that do not agree.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation exceeded its configured budget (e.g. the S-pair limit).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Evaluation hit a zero of a denominator.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Expression or operator outside the supported closed class.
class UnsupportedError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The symmetric positive definite factorization failed even after jitter.
class FactorizationError : public std::runtime_error {
 public:
  FactorizationError(const std::string& what, double min_pivot)
      : std::runtime_error(what), min_pivot_(min_pivot) {}
  double min_pivot() const { return min_pivot_; }

 private:
  double min_pivot_;
};

/// Syntax or semantic error in text input, with a 1-based position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + message),
        message_(message),
        line_(line),
        column_(column) {}

  const std::string& message() const { return message_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace lcgp
