#pragma once

#include <stdexcept>
#include <string>

namespace rns {

enum class ErrorCode {
  ParamsOutOfRange,
  DigitOutOfAlphabet,
  ValueOutOfRange,
  ParseError,
  StateLimitExceeded,
  EndpointNotCovered,
  DegenerateDimension,
  InvalidSampleCount,
};

const char* error_code_name(ErrorCode code);

/// Domain error with a stable code; the CLI maps codes to exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }
  const char* code_name() const { return error_code_name(code_); }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace rns
