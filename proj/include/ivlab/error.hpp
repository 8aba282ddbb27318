#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ivlab {

enum class ErrorCode {
  InvalidBounds,
  DivisionByZeroInterval,
  NoSignChange,
  NotMonotone,
  DerivativeZero,
  CorrectionDenominatorZero,
  DerivativeStraddlesZero,
  InsufficientTrace,
  ZeroRadius,
  ConfigInvalid,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Library-wide exception. Method *failures* (lost inclusion, empty
/// intersections) are never reported through this type; they are recorded
/// in traces. Errors are reserved for violated preconditions and bad input.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), detail_(what) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace ivlab
