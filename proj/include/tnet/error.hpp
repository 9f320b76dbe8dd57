#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tnet {

enum class ErrorCode {
  NonPrime,
  TooLarge,
  DivByZero,
  SpecMismatch,
  NotASubfield,
  EqualPoints,
  EqualLines,
  ZeroVector,
  PonCenter,
  CenterOnScreen,
  NotOnCurve,
  SingularPoint,
  NoSuchSubgroup,
  IndexTooSmall,
  InvalidCosets,
  SizeMismatch,
  BadParameters,
  NotASubgroup,
  DegenerateCosets,
  ConditionViolated,
  ExhaustedPointChoices,
  NonAffinePoint,
  OutOfRange,
  CharTooSmall,
  CNotOnLine,
  PreconditionFailed,
  TheoremViolated,
  OnConic,
  IsNucleus,
  NotOrder2,
  NotOrder4,
  CanonicalizationFailed,
  NoEquivalence,
  BudgetExceeded,
  ParseError,
  NotOnConic,
  PointOnEll,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above; the
/// CLI maps them onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tnet
