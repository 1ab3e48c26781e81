#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace wordhom {

enum class ErrorCode {
  InvalidInput,
  ResourceLimit,
  DisjointnessViolation,
  PreconditionViolated,
  NotACycle,
  OutOfRange,
  TruncationError,
  GeneralPositionExhausted,
  InternalInvariantBroken,
  VerificationFailed,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Exit status the command-line tool reports for an error of this kind.
/// 1 = a mathematical verification failed, 2 = invalid input, 3 = resource limit.
int exit_code_for(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, std::string context = {})
      : std::runtime_error(std::move(message)), code_(code), context_(std::move(context)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& context() const noexcept { return context_; }

 private:
  ErrorCode code_;
  std::string context_;
};

}  // namespace wordhom
