#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace binpred {

enum class ErrorCode {
  NotPrime,
  ValueOutOfRange,
  DigitOutOfRange,
  Overflow,
  InvalidIndices,
  XExceedsN,
  TExceedsN,
  GuardExceeded,
  NotZumkellerInput,
  SamePrime,
  InvalidRange,
};

std::string_view to_string(ErrorCode code);

// Input/validation failure. Internal inconsistencies (an inexact division in
// a valuation formula, a spectrum that does not partition [0..n]) are raised
// as std::logic_error instead.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace binpred
