#pragma once

#include <stdexcept>
#include <string>

namespace turan {

enum class ErrorCode {
  NotPrimePower,
  NotPrime,
  ParamViolation,
  RangeViolation,
  DivisionByZero,
  ZeroElement,
  NotPrimitive,
  SearchExhausted,
  InvalidInput,
};

const char* to_string(ErrorCode code);

// Hypothesis and domain violations. The CLI maps every Error to exit code 2.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace turan
