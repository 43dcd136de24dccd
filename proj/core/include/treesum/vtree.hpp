#pragma once

#include <vector>

#include "treesum/lca.hpp"
#include "treesum/summary.hpp"
#include "treesum/tree.hpp"

namespace treesum {

// Tree left after dropping every zero-weight node that is neither the root
// nor the LCA of two preorder-consecutive important nodes. Nodes keep their
// ids and original levels, so scoring on `tree` matches scoring on the
// source tree for the surviving nodes.
struct ReducedTree {
  WeightedTree tree;
  // reduced node -> node of the source tree
  std::vector<NodeId> original;

  std::size_t size() const noexcept { return tree.size(); }
  // Level gap between a reduced node and its reduced parent (0 for the root).
  int edge_weight(NodeId reduced_child) const;
};

ReducedTree vtree(const WeightedTree& tree);
ReducedTree vtree(const WeightedTree& tree, const EulerLcaIndex& index);

// Re-expresses a result computed on `reduced` in terms of `source` and
// recomputes its score there. Throws ScoreMismatch when the two scores
// disagree beyond kScoreTolerance (relative to the score's magnitude).
SummaryResult lift_result(const WeightedTree& source, const ReducedTree& reduced,
                          const SummaryResult& result);

}  // namespace treesum
