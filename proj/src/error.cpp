#include "cusp/error.hpp"

namespace cusp {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kNotIncreasing: return "NotIncreasing";
    case ErrorCode::kGcdChainViolated: return "GcdChainViolated";
    case ErrorCode::kGcdNotOne: return "GcdNotOne";
    case ErrorCode::kNotLargeSurgery: return "NotLargeSurgery";
    case ErrorCode::kSpincOutOfRange: return "SpincOutOfRange";
    case ErrorCode::kMultipleSummands: return "MultipleSummands";
    case ErrorCode::kSingularMatrix: return "SingularMatrix";
    case ErrorCode::kCongruenceViolated: return "CongruenceViolated";
    case ErrorCode::kRangeViolated: return "RangeViolated";
    case ErrorCode::kInvalidProblem: return "InvalidProblem";
    case ErrorCode::kNotTwoGenerator: return "NotTwoGenerator";
    case ErrorCode::kInvalidTorusParameters: return "InvalidTorusParameters";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kIo: return "IoError";
    case ErrorCode::kSchema: return "SchemaError";
    case ErrorCode::kValidation: return "ValidationError";
  }
  return "Error";
}

}  // namespace cusp
