#include "binpred/error.hpp"

namespace binpred {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::ValueOutOfRange: return "ValueOutOfRange";
    case ErrorCode::DigitOutOfRange: return "DigitOutOfRange";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::InvalidIndices: return "InvalidIndices";
    case ErrorCode::XExceedsN: return "XExceedsN";
    case ErrorCode::TExceedsN: return "TExceedsN";
    case ErrorCode::GuardExceeded: return "GuardExceeded";
    case ErrorCode::NotZumkellerInput: return "NotZumkellerInput";
    case ErrorCode::SamePrime: return "SamePrime";
    case ErrorCode::InvalidRange: return "InvalidRange";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace binpred
