#include "ffsqfree/error.hpp"

namespace ffsqfree {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::ModulusMismatch: return "ModulusMismatch";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::BothZero: return "BothZero";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::ConstantPolynomial: return "ConstantPolynomial";
    case ErrorKind::ConstantInX: return "ConstantInX";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::CoefficientOutOfField: return "CoefficientOutOfField";
    case ErrorKind::NotSeparable: return "NotSeparable";
    case ErrorKind::ContentNotSquarefree: return "ContentNotSquarefree";
    case ErrorKind::NonconstantLeadingCoefficient: return "NonconstantLeadingCoefficient";
  }
  return "Unknown";
}

namespace {
std::string decorate(ErrorKind kind, const std::string& message,
                     std::optional<std::size_t> position) {
  std::string out(to_string(kind));
  out += ": ";
  out += message;
  if (position) out += " (at offset " + std::to_string(*position) + ")";
  return out;
}
}  // namespace

Error::Error(ErrorKind kind, const std::string& message, std::optional<std::size_t> position)
    : std::runtime_error(decorate(kind, message, position)), kind_(kind), position_(position) {}

void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace ffsqfree
