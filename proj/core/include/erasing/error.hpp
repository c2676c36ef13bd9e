#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace erasing {

enum class ErrorCode {
  kMissingBlock,
  kDuplicateBlock,
  kNoEmptyImage,
  kMultipleEmptyImages,
  kErasedBlockIsAllOnes,
  kBadSymbol,
  kBadLiteral,
  kNotAlternatingRequired,
  kInsufficientInput,
  kNoFactorization,
  kNotOptimal,
  kHasEpsilonFactor,
  kEpsilonTail,
  kNotInRange,
  kNotStronglyErasing,
  kClassificationUnsatisfied,
  kBudgetExceeded,
  kInvalidArgument,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail, int line = 0);

  ErrorCode code() const { return code_; }
  // 1-based line of a spec file; 0 when not applicable.
  int line() const { return line_; }

 private:
  ErrorCode code_;
  int line_;
};

}  // namespace erasing
