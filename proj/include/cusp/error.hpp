#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cusp {

enum class ErrorCode {
  kParse,
  kNotIncreasing,
  kGcdChainViolated,
  kGcdNotOne,
  kNotLargeSurgery,
  kSpincOutOfRange,
  kMultipleSummands,
  kSingularMatrix,
  kCongruenceViolated,
  kRangeViolated,
  kInvalidProblem,
  kNotTwoGenerator,
  kInvalidTorusParameters,
  kTooLarge,
  kIo,
  kSchema,
  kValidation,
};

std::string_view error_code_name(ErrorCode code);

// Every failure surfaced by the library carries a code and a message naming
// the constraint that failed.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cusp
