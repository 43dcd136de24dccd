#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "treesum/tree.hpp"

namespace treesum {

/// Tolerance used wherever two scores are compared.
inline constexpr double kScoreTolerance = 1e-9;

/// A set of selected nodes over a fixed tree. Keeps insertion order for
/// reporting and a membership bitmap for O(1) lookups.
class SummarySet {
 public:
  explicit SummarySet(std::size_t universe) : flags_(universe, 0) {}
  SummarySet(std::size_t universe, std::span<const NodeId> members);

  bool contains(NodeId v) const { return v < flags_.size() && flags_[v] != 0; }
  /// Returns false when v was already a member.
  bool insert(NodeId v);
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  std::size_t universe() const noexcept { return flags_.size(); }
  std::span<const NodeId> members() const noexcept { return members_; }

 private:
  std::vector<std::uint8_t> flags_;
  std::vector<NodeId> members_;
};

// Correlation of x on y: 1 / (l(y) - l(x) + 1) when x is an ancestor of y
// (self included), 0 otherwise. Levels, not depths, so reduced trees agree
// with the tree they came from.
double cor(const WeightedTree& tree, NodeId x, NodeId y);

// Representative impact feq(y) * cor(x, y).
double rep(const WeightedTree& tree, NodeId x, NodeId y);

// Best representative impact on y among the members of S on y's root path;
// 0 when none of y's ancestors is selected.
double smy(const WeightedTree& tree, const SummarySet& s, NodeId y);

// Summary score g(S): sum of smy over the important nodes, in preorder.
double g_score(const WeightedTree& tree, const SummarySet& s);
double g_score(const WeightedTree& tree, std::span<const NodeId> members);

// Nearest strict ancestor of v inside S, or kNoNode.
NodeId nearest_selected_ancestor(const WeightedTree& tree, const SummarySet& s, NodeId v);

/// g(S + x) - g(S) from one pass over the subtree of x. The pass stops at
/// selected descendants (they keep their own representatives) and every
/// remaining important node trades the impact of the nearest selected
/// ancestor of x for the impact of x. Throws AlreadySelected when x is in S.
double marginal_gain_fast(const WeightedTree& tree, const SummarySet& s, NodeId x);

/// g(S + x) - g(S) by two full evaluations. Test oracle for the fast path.
double marginal_gain_naive(const WeightedTree& tree, const SummarySet& s, NodeId x);

}  // namespace treesum
