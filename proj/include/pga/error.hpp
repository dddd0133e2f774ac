#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pga {

enum class ErrorKind {
  DivisionByZero,
  InvalidArgument,
  GradeMismatch,
  NullLine,
  IdealPoint,
  Coincident,
  Perpendicular,
  Degenerate,
  Parse,
  Type,
};

std::string_view to_string(ErrorKind kind) noexcept;

// All domain failures in the library are reported as this exception; nothing
// aborts or returns a sentinel.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

} // namespace pga
