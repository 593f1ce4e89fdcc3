#include "aic/error.hpp"

namespace aic {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::NonPrime: return "NonPrime";
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::ZeroInverse: return "ZeroInverse";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::NotADivisor: return "NotADivisor";
    case Errc::NonCoprimeMultiplier: return "NonCoprimeMultiplier";
    case Errc::InvalidDefiningSet: return "InvalidDefiningSet";
    case Errc::TooLarge: return "TooLarge";
    case Errc::AlphabetMismatch: return "AlphabetMismatch";
    case Errc::SingularMap: return "SingularMap";
    case Errc::NotInGroup: return "NotInGroup";
    case Errc::TrivialCode: return "TrivialCode";
    case Errc::InternalInconsistency: return "InternalInconsistency";
    case Errc::NotAPGroup: return "NotAPGroup";
    case Errc::NotACocycle: return "NotACocycle";
    case Errc::CondViolation: return "CondViolation";
    case Errc::DegenerateA: return "DegenerateA";
    case Errc::ChiNotLinear: return "ChiNotLinear";
    case Errc::MalformedDescriptor: return "MalformedDescriptor";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::NotRegular: return "NotRegular";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace aic
