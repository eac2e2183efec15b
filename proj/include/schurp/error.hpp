#pragma once

#include <stdexcept>
#include <string>

namespace schurp {

enum class ErrorCode {
  NonPositivePart,
  NotStrict,
  NotContained,
  LengthCondition,
  CoincidentCoordinates,
  NonDivisible,
  UnsupportedIndex,
  SingularDenominator,
  NonIntegerResult,
  EvenPart,
  SizeMismatch,
  DegreeTooLarge,
  InfeasibleRemainder,
  InvalidArgument,
};

// Domain error carrying a machine-checkable code. Messages name the violated
// precondition and are shown to CLI users verbatim.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace schurp
