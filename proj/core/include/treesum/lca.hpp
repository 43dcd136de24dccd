#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "treesum/tree.hpp"

namespace treesum {

/*
 * Lowest common ancestor index: Euler tour of the tree plus a sparse table
 * over the tour depths. O(n log n) build, O(1) query.
 */
class EulerLcaIndex {
 public:
  explicit EulerLcaIndex(const WeightedTree& tree);

  // Deepest common (self-inclusive) ancestor of a and b.
  NodeId lca(NodeId a, NodeId b) const;

  // Hop distance along the unique tree path.
  int distance(NodeId a, NodeId b) const;

  std::span<const NodeId> euler_tour() const noexcept { return tour_; }
  std::uint32_t first_occurrence(NodeId v) const;

 private:
  // index into tour_ of the shallower entry
  std::uint32_t shallower(std::uint32_t i, std::uint32_t j) const {
    return depth_[tour_[i]] <= depth_[tour_[j]] ? i : j;
  }

  std::vector<NodeId> tour_;
  std::vector<std::uint32_t> first_;
  std::vector<int> depth_;
  // table_[j][i] = argmin over tour positions [i, i + 2^j)
  std::vector<std::vector<std::uint32_t>> table_;
};

}  // namespace treesum
