#include "rscrit/error.hpp"

namespace rscrit {

std::string_view errorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NonIntegralResult: return "NonIntegralResult";
    case ErrorCode::NotPure: return "NotPure";
    case ErrorCode::NotDisjoint: return "NotDisjoint";
    case ErrorCode::DegenerateIndexRange: return "DegenerateIndexRange";
    case ErrorCode::OddDimension: return "OddDimension";
    case ErrorCode::NotKostant: return "NotKostant";
    case ErrorCode::MiddleHodgeType: return "MiddleHodgeType";
    case ErrorCode::NotCritical: return "NotCritical";
    case ErrorCode::NotOddOdd: return "NotOddOdd";
    case ErrorCode::TooLarge: return "TooLarge";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(errorCodeName(code)) + ": " + what), code_(code) {}

void raise(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace rscrit
