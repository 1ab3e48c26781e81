#include "wordhom/error.hpp"

namespace wordhom {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::DisjointnessViolation: return "DisjointnessViolation";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::NotACycle: return "NotACycle";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::TruncationError: return "TruncationError";
    case ErrorCode::GeneralPositionExhausted: return "GeneralPositionExhausted";
    case ErrorCode::InternalInvariantBroken: return "InternalInvariantBroken";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
  }
  return "Unknown";
}

int exit_code_for(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ResourceLimit: return 3;
    case ErrorCode::GeneralPositionExhausted:
    case ErrorCode::InternalInvariantBroken:
    case ErrorCode::VerificationFailed: return 1;
    default: return 2;
  }
}

}  // namespace wordhom
