#include "erasing/error.hpp"

namespace erasing {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMissingBlock: return "MissingBlock";
    case ErrorCode::kDuplicateBlock: return "DuplicateBlock";
    case ErrorCode::kNoEmptyImage: return "NoEmptyImage";
    case ErrorCode::kMultipleEmptyImages: return "MultipleEmptyImages";
    case ErrorCode::kErasedBlockIsAllOnes: return "ErasedBlockIsAllOnes";
    case ErrorCode::kBadSymbol: return "BadSymbol";
    case ErrorCode::kBadLiteral: return "BadLiteral";
    case ErrorCode::kNotAlternatingRequired: return "NotAlternatingRequired";
    case ErrorCode::kInsufficientInput: return "InsufficientInput";
    case ErrorCode::kNoFactorization: return "NoFactorization";
    case ErrorCode::kNotOptimal: return "NotOptimal";
    case ErrorCode::kHasEpsilonFactor: return "HasEpsilonFactor";
    case ErrorCode::kEpsilonTail: return "EpsilonTail";
    case ErrorCode::kNotInRange: return "NotInRange";
    case ErrorCode::kNotStronglyErasing: return "NotStronglyErasing";
    case ErrorCode::kClassificationUnsatisfied: return "ClassificationUnsatisfied";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

std::string format_message(ErrorCode code, const std::string& detail, int line) {
  std::string msg(error_name(code));
  if (line > 0) msg += " at line " + std::to_string(line);
  if (!detail.empty()) msg += ": " + detail;
  return msg;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& detail, int line)
    : std::runtime_error(format_message(code, detail, line)), code_(code), line_(line) {}

}  // namespace erasing
