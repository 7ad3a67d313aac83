#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ffsqfree {

enum class ErrorKind {
  NotPrime,
  InvalidArgument,
  DivisionByZero,
  FieldMismatch,
  ModulusMismatch,
  ArityMismatch,
  BothZero,
  ZeroPolynomial,
  ConstantPolynomial,
  ConstantInX,
  Overflow,
  SyntaxError,
  UnknownVariable,
  CoefficientOutOfField,
  NotSeparable,
  ContentNotSquarefree,
  NonconstantLeadingCoefficient,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Single exception type for the library; `kind()` says which contract was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<std::size_t> position = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }
  /// Byte offset into the parsed text, set for SyntaxError and friends.
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> position_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

}  // namespace ffsqfree
