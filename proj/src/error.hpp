#pragma once

#include <stdexcept>
#include <string>

namespace plcoh {

// Failure categories shared by the C++ core and the C API layer.
enum class ErrorCode {
  InvalidArgument,
  TooShort,
  NonFinite,
  Domain,
  InsufficientPoints,
  ScaleTooLarge,
  DegenerateBox,
  EvenWindow,
  WindowTooLarge,
  LagOutOfRange,
  DegenerateSeries,
  AllFitsFailed,
  AllRepetitionsFailed,
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace plcoh
