#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tbt {

// Failure categories shared by every module. The CLI maps them to exit codes.
enum class ErrorCode {
  InvalidArgument,
  NotPrime,
  DimensionMismatch,
  ParseError,
  NoSolution,
  NotUnique,
  EmptySpan,
  ZeroVector,
  InvalidSpan,
  ZeroRow,
  ZeroCode,
  UnsupportedPosition,
  SupportError,
  TooLarge,
  SearchBudgetExceeded,
  InvalidTrellis,
  NotOrthogonal,
  RankDeficient,
  BadSelectionSize,
  BadSize,
  DegeneratePairing,
  InvalidCharacteristicPair,
  NoUniqueSolution,
  VerificationFailed,
  DualityFailed,
  SymmetryFailed,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tbt
