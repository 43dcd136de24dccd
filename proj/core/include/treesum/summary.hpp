#pragma once

#include <string>
#include <vector>

#include "treesum/tree.hpp"

namespace treesum {

struct TraceStep {
  NodeId node = kNoNode;
  double gain = 0.0;
};

// Output of every summarizer. `selected` is in selection order for greedy
// and in preorder for the others; `trace` is only filled by greedy.
struct SummaryResult {
  std::string algorithm;
  std::vector<NodeId> selected;
  double score = 0.0;
  std::vector<TraceStep> trace;
  // Set when fewer than k nodes qualified (CAGG).
  bool underfilled = false;
};

}  // namespace treesum
