#ifndef VECDOM_ERROR_H_
#define VECDOM_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace vecdom {

enum class ErrorCode {
  kOutOfRange,
  kSelfLoop,
  kDuplicateEdge,
  kSizeMismatch,
  kNotATree,
  kNotCograph,
  kNotThreshold,
  kNotComplete,
  kAlphaOutOfRange,
  kUnknownVariant,
  kMissingParam,
  kInvalidVariant,
  kWrongVariant,
  kAlreadyInSet,
  kInfeasible,
  kTooLarge,
  kIsolatedVertex,
  kBlockTooSmall,
  kFeasibilityConditionViolated,
  kMalformed,
  kCountMismatch,
  kNegativeDemand,
  kDuplicateVertex,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures surface as this exception. `code()` is stable and is
// what the CLI maps to exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace vecdom

#endif  // VECDOM_ERROR_H_
