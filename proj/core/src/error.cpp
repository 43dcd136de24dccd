#include "treesum/error.hpp"

namespace treesum {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDuplicateId: return "DuplicateId";
    case ErrorCode::kMultipleRoots: return "MultipleRoots";
    case ErrorCode::kNoRoot: return "NoRoot";
    case ErrorCode::kOrphanParentReference: return "OrphanParentReference";
    case ErrorCode::kCycleDetected: return "CycleDetected";
    case ErrorCode::kNegativeWeight: return "NegativeWeight";
    case ErrorCode::kUnknownNode: return "UnknownNode";
    case ErrorCode::kAlreadySelected: return "AlreadySelected";
    case ErrorCode::kInvalidK: return "InvalidK";
    case ErrorCode::kEnumerationTooLarge: return "EnumerationTooLarge";
    case ErrorCode::kEmptySummary: return "EmptySummary";
    case ErrorCode::kNoImportantNodes: return "NoImportantNodes";
    case ErrorCode::kScoreMismatch: return "ScoreMismatch";
    case ErrorCode::kInconsistentMemo: return "InconsistentMemo";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kMalformedLine: return "MalformedLine";
    case ErrorCode::kInvalidSpec: return "InvalidSpec";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

}  // namespace treesum
