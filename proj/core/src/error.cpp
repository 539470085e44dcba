#include "theta_lab/error.hpp"

namespace theta_lab {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::kParseError: return "PARSE_ERROR";
    case ErrorCode::kDivisionByZero: return "DIVISION_BY_ZERO";
    case ErrorCode::kNotRational: return "NOT_RATIONAL";
    case ErrorCode::kNotInteger: return "NOT_INTEGER";
    case ErrorCode::kSingularSystem: return "SINGULAR_SYSTEM";
    case ErrorCode::kNonIntegralChern: return "NON_INTEGRAL_CHERN";
    case ErrorCode::kInfeasible: return "INFEASIBLE";
    case ErrorCode::kNotSquarefree: return "NOT_SQUAREFREE";
    case ErrorCode::kEvenCharacteristic: return "EVEN_CHARACTERISTIC";
    case ErrorCode::kNotPrime: return "NOT_PRIME";
    case ErrorCode::kDoesNotSplit: return "DOES_NOT_SPLIT";
    case ErrorCode::kWrongDegree: return "WRONG_DEGREE";
    case ErrorCode::kOrderTwo: return "ORDER_TWO";
    case ErrorCode::kNotWeierstrass: return "NOT_WEIERSTRASS";
    case ErrorCode::kNotOnCurve: return "NOT_ON_CURVE";
    case ErrorCode::kInvalidDivisor: return "INVALID_DIVISOR";
    case ErrorCode::kFieldTooLarge: return "FIELD_TOO_LARGE";
    case ErrorCode::kUnsupportedGenus: return "UNSUPPORTED_GENUS";
  }
  return "UNKNOWN";
}

}  // namespace theta_lab
