#include "hgt/error.hpp"

namespace hgt {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::DivisionByZeroPoly: return "DivisionByZeroPoly";
    case ErrorKind::AllZeroOperator: return "AllZeroOperator";
    case ErrorKind::RepeatedRootBeyondSupport: return "RepeatedRootBeyondSupport";
    case ErrorKind::InconsistentFactorization: return "InconsistentFactorization";
    case ErrorKind::InvalidEquation: return "InvalidEquation";
    case ErrorKind::InvalidFamily: return "InvalidFamily";
    case ErrorKind::ForbiddenParameter: return "ForbiddenParameter";
    case ErrorKind::DegenerateTransform: return "DegenerateTransform";
    case ErrorKind::SingularSubstitution: return "SingularSubstitution";
    case ErrorKind::UnresolvedFactor: return "UnresolvedFactor";
    case ErrorKind::NotHeunReducible: return "NotHeunReducible";
    case ErrorKind::ConfluentOrDegenerate: return "ConfluentOrDegenerate";
    case ErrorKind::DegenerateZeta: return "DegenerateZeta";
  }
  return "Unknown";
}

}  // namespace hgt
