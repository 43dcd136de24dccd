#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "treesum/summary.hpp"
#include "treesum/tree.hpp"

namespace treesum {

enum class DpChoice : std::uint8_t { kNo, kYes };

/// One reduced DP state: best score inside the subtree of `node` when
/// `budget` more nodes may be picked there and the closest selected node
/// above `node` is `nearest_selected_ancestor` (kNoNode for none).
struct DpKey {
  NodeId node = kNoNode;
  int budget = 0;
  NodeId nearest_selected_ancestor = kNoNode;
};

struct DpEntry {
  double value = 0.0;
  DpChoice choice = DpChoice::kNo;
  // Budget handed to each child, in child order.
  std::vector<int> split;
};

struct KnapsackResult {
  double value = 0.0;
  std::vector<int> split;
};

/// Exact tree summarizer.
///
/// The table holds one value per (node, budget, nearest selected ancestor).
/// Because that ancestor always lies on the root path it is addressed by its
/// depth, so node u owns (depth(u) + 1) ancestor slots, slot 0 meaning "no
/// selected ancestor". Budgets above the subtree size cannot be spent and
/// are clamped, which keeps leaves at two budget columns.
///
/// Every state is filled bottom-up in reverse preorder; there is no
/// recursion, so tree height is limited only by memory. The solver keeps a
/// reference to the tree, which must outlive it.
///
/// Budgets are at-most budgets: a subtree may leave part of its budget
/// unspent. Because g is monotone this gives the same optimum as spending
/// exactly k, and ots() pads the reconstructed set to k nodes.
///
/// Tie-breaks: No wins over Yes on equal values; knapsack splits prefer the
/// smallest budget for earlier children.
class OtsSolver {
 public:
  OtsSolver(const WeightedTree& tree, int k);

  int k() const noexcept { return k_; }

  /// OTS(root, k, none).
  double optimum() const;

  /// Memoized value of a state. Throws InvalidSpec for malformed keys.
  double value(const DpKey& key) const;

  /// Value, Yes/No choice, and the child budget split realizing it.
  DpEntry dp_eval(const DpKey& key) const;

  /// feq(u) + best split of budget - 1 over the children with u selected.
  double yes_case(const DpKey& key) const;

  /// smy({na}, u) + best split of budget over the children, na unchanged.
  double no_case(const DpKey& key) const;

  /// Best assignment of `budget` over `children`, all of which see `na` as
  /// their nearest selected ancestor. Children may receive 0.
  KnapsackResult knapsack_combine(std::span<const NodeId> children, int budget,
                                  NodeId na) const;

  /// Walks stored choices down from (root, budget, none). Result in preorder.
  std::vector<NodeId> reconstruct(int budget) const;
  std::vector<NodeId> reconstruct() const { return reconstruct(k_); }

  /// Number of stored states; bounded by n * (h + 1) * (k + 1).
  std::size_t state_count() const noexcept { return value_.size(); }

 private:
  std::size_t slot_of(NodeId u, NodeId na) const;
  std::size_t cell(NodeId u, std::size_t slot, int budget) const {
    const int b = budget < cap_[u] ? budget : cap_[u];
    return offset_[u] + slot * static_cast<std::size_t>(cap_[u] + 1) +
           static_cast<std::size_t>(b);
  }
  double smy_from(NodeId u, NodeId na) const;
  // Forward knapsack over children for every budget 0..max_budget; writes
  // into out[0..max_budget].
  void knapsack_all(std::span<const NodeId> children, std::size_t child_slot,
                    int max_budget, std::vector<double>& out,
                    std::vector<double>& scratch) const;
  void solve();

  const WeightedTree& tree_;
  int k_;
  std::vector<int> cap_;
  std::vector<std::size_t> offset_;
  std::vector<double> value_;
  std::vector<DpChoice> choice_;
};

/// Optimal summary of exactly k nodes. Throws InvalidK unless 1 <= k <= n.
SummaryResult ots(const WeightedTree& tree, int k);

}  // namespace treesum
