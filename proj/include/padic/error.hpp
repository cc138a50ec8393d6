#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace padic {

enum class ErrorCode {
  ContextMismatch,
  NegativeValuation,
  DivisionByZero,
  NotAUnit,
  ParseError,
  LeadingNotUnit,
  NotMOM,
  NotNilpotent,
  VerificationFailed,
  OrderExhausted,
  ReconstructionFailed,
  NotInK0,
  IntegralityFailure,
  BadContext,
  BadParameters,
  SingularMatrix,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// VerificationFailed carries the first series order at which an identity broke.
class VerificationError : public Error {
 public:
  VerificationError(const std::string& what, long first_order)
      : Error(ErrorCode::VerificationFailed,
              what + " (first offending order " + std::to_string(first_order) + ")"),
        first_order_(first_order) {}

  long first_order() const noexcept { return first_order_; }

 private:
  long first_order_;
};

}  // namespace padic
