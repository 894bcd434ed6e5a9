#include "tbt/errors.hpp"

namespace tbt {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::NotUnique: return "NotUnique";
    case ErrorCode::EmptySpan: return "EmptySpan";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::InvalidSpan: return "InvalidSpan";
    case ErrorCode::ZeroRow: return "ZeroRow";
    case ErrorCode::ZeroCode: return "ZeroCode";
    case ErrorCode::UnsupportedPosition: return "UnsupportedPosition";
    case ErrorCode::SupportError: return "SupportError";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::InvalidTrellis: return "InvalidTrellis";
    case ErrorCode::NotOrthogonal: return "NotOrthogonal";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::BadSelectionSize: return "BadSelectionSize";
    case ErrorCode::BadSize: return "BadSize";
    case ErrorCode::DegeneratePairing: return "DegeneratePairing";
    case ErrorCode::InvalidCharacteristicPair: return "InvalidCharacteristicPair";
    case ErrorCode::NoUniqueSolution: return "NoUniqueSolution";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::DualityFailed: return "DualityFailed";
    case ErrorCode::SymmetryFailed: return "SymmetryFailed";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace tbt
