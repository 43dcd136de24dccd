#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace treesum {

enum class ErrorCode {
  kDuplicateId,
  kMultipleRoots,
  kNoRoot,
  kOrphanParentReference,
  kCycleDetected,
  kNegativeWeight,
  kUnknownNode,
  kAlreadySelected,
  kInvalidK,
  kEnumerationTooLarge,
  kEmptySummary,
  kNoImportantNodes,
  kScoreMismatch,
  kInconsistentMemo,
  kIoError,
  kMalformedLine,
  kInvalidSpec,
};

std::string_view to_string(ErrorCode code);

// Every failure surfaced by the library carries one of the codes above so
// callers (the CLI in particular) can map them to exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace treesum
