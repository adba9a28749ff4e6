#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rscrit {

enum class ErrorCode {
  InvalidArgument,
  RankMismatch,
  ShapeMismatch,
  NonIntegralResult,
  NotPure,
  NotDisjoint,
  DegenerateIndexRange,
  OddDimension,
  NotKostant,
  MiddleHodgeType,
  NotCritical,
  NotOddOdd,
  TooLarge,
};

std::string_view errorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& what);

}  // namespace rscrit
