#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace aic {

/// Error tags surfaced by every module. The CLI reports these names verbatim.
enum class Errc {
  InvalidArgument,
  NonPrime,
  ReducibleModulus,
  ZeroInverse,
  FieldMismatch,
  NotADivisor,
  NonCoprimeMultiplier,
  InvalidDefiningSet,
  TooLarge,
  AlphabetMismatch,
  SingularMap,
  NotInGroup,
  TrivialCode,
  InternalInconsistency,
  NotAPGroup,
  NotACocycle,
  CondViolation,
  DegenerateA,
  ChiNotLinear,
  MalformedDescriptor,
  BudgetExceeded,
  NotRegular,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }
  std::string_view tag() const noexcept { return to_string(code_); }

 private:
  Errc code_;
};

}  // namespace aic
