#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hgt {

/// Mathematical failure categories. Every error raised by the library
/// carries one of these so callers (notably the CLI) can map it to an
/// exit status without parsing messages.
enum class ErrorKind {
  DivisionByZero,
  DivisionByZeroPoly,
  AllZeroOperator,
  RepeatedRootBeyondSupport,
  InconsistentFactorization,
  InvalidEquation,
  InvalidFamily,
  ForbiddenParameter,
  DegenerateTransform,
  SingularSubstitution,
  UnresolvedFactor,
  NotHeunReducible,
  ConfluentOrDegenerate,
  DegenerateZeta,
};

std::string_view to_string(ErrorKind kind) noexcept;

class MathError : public std::runtime_error {
 public:
  MathError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Malformed textual input (polynomial literals, family literals, spec files).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                           ": " + message),
        line_(line),
        column_(column) {}
  explicit ParseError(const std::string& message) : std::runtime_error(message) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_ = 0;
  std::size_t column_ = 0;
};

}  // namespace hgt
