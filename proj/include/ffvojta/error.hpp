#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ffvojta {

enum class ErrorCode {
  ZeroFunction,
  AllZero,
  ZeroPolynomial,
  ConstantPolynomial,
  STooSmall,
  InvalidPlace,
  InvalidUnit,
  NotUnit,
  NotSInteger,
  ZeroDifference,
  ConstantQuotient,
  VanishingSubsum,
  SumNonzero,
  BothZero,
  DegenerateDegree,
  PreconditionViolated,
  InvalidInput,
  EmptyFactorization,
  DegenerateMap,
  SectionInsideZ,
  NotSplit,
  NotIrreducibleAttested,
  ParseError,
  DivisionByZeroPoly,
  Io,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries a machine-readable code; the
/// message holds the human-readable detail (offending place, subset, ...).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ffvojta
