#pragma once

#include "treesum/summary.hpp"
#include "treesum/tree.hpp"

namespace treesum {

/// Greedy tree summarization. Runs k rounds; each round adds the unselected
/// node with the largest marginal gain. Gains within kScoreTolerance of the
/// round's maximum count as ties and go to the node earliest in preorder.
///
/// Evaluation is lazy: g is submodular, so a gain measured in an earlier
/// round bounds the current one from above, and a round only recomputes
/// (with marginal_gain_fast()) the entries that reach the top of a max-heap.
/// The selection is the one a full rescan of every node per round would make.
///
/// Worst case O(n h k log n) time, O(n) extra space. Throws InvalidK unless
/// 1 <= k <= n.
SummaryResult gts(const WeightedTree& tree, int k);

}  // namespace treesum
