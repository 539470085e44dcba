#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace theta_lab {

/// Domain failures raised by the library. The CLI maps every code to exit status 1
/// and prints `error: <CODE>: <message>`.
enum class ErrorCode {
  kInvalidArgument,
  kParseError,
  kDivisionByZero,
  kNotRational,
  kNotInteger,
  kSingularSystem,
  kNonIntegralChern,
  kInfeasible,
  kNotSquarefree,
  kEvenCharacteristic,
  kNotPrime,
  kDoesNotSplit,
  kWrongDegree,
  kOrderTwo,
  kNotWeierstrass,
  kNotOnCurve,
  kInvalidDivisor,
  kFieldTooLarge,
  kUnsupportedGenus,
};

/// Upper-snake identifier used in machine-readable error lines, e.g. "NOT_RATIONAL".
std::string_view error_code_name(ErrorCode code);

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

}  // namespace theta_lab
