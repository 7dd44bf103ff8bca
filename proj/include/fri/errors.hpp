#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fri {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A characteristic-point chain or a precedence requirement does not hold.
class OrderingViolation : public Error {
 public:
  using Error::Error;
};

/// A scalar argument lies outside its admissible range (alpha level, exponent, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// No rule precedes (or none succeeds) the observation in some dimension.
class NotFlanked : public Error {
 public:
  using Error::Error;
};

/// Both antecedent points coincide with the observation point, so the
/// inverse-distance weights are 0/0.
class ZeroSpan : public Error {
 public:
  using Error::Error;
};

/// Mismatched or unsupported antecedent dimension.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Malformed document text. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Well-formed document whose content violates the schema or set invariants.
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace fri
