#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace treesum {

// Dense node index. External identifiers are strings; everything inside the
// library addresses nodes by their position in the input record list.
using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

struct NodeRecord {
  std::string id;
  std::optional<std::string> parent;
  double weight = 0.0;
  std::string label;
};

/// Immutable rooted tree with nonnegative node weights.
///
/// Two integer heights are kept per node. `depth` is the hop count from the
/// root and is what the structure itself implies. `level` is the value the
/// correlation function sees; for trees built from records the two agree,
/// while a reduced tree keeps the levels of the tree it was cut from so that
/// level differences survive the removal of intermediate nodes.
///
/// Children keep input order, and that order fixes the preorder used for
/// every deterministic tie-break downstream.
class WeightedTree {
 public:
  WeightedTree() = default;

  /// Validates the records and builds the tree. Levels equal depths.
  static WeightedTree build(std::span<const NodeRecord> records);

  /// Same as build(), but node i gets level `levels[i]`. Levels must strictly
  /// increase from parent to child; the root may sit at any level >= 0.
  static WeightedTree build_with_levels(std::span<const NodeRecord> records,
                                        std::span<const int> levels);

  std::size_t size() const noexcept { return weight_.size(); }
  NodeId root() const noexcept { return root_; }

  NodeId parent(NodeId v) const { return parent_[checked(v)]; }
  std::span<const NodeId> children(NodeId v) const {
    checked(v);
    return {child_list_.data() + child_begin_[v],
            child_list_.data() + child_begin_[v + 1]};
  }
  double weight(NodeId v) const { return weight_[checked(v)]; }
  int level(NodeId v) const { return level_[checked(v)]; }
  int depth(NodeId v) const { return depth_[checked(v)]; }
  const std::string& id(NodeId v) const { return ids_[checked(v)]; }
  const std::string& label(NodeId v) const { return labels_[checked(v)]; }

  /// Largest depth of any node (0 for a single node).
  int height() const noexcept { return height_; }

  std::optional<NodeId> find(std::string_view id) const;
  /// Like find() but throws UnknownNode.
  NodeId at(std::string_view id) const;

  std::span<const NodeId> preorder() const noexcept { return preorder_; }
  std::size_t preorder_index(NodeId v) const { return preorder_pos_[checked(v)]; }
  std::size_t subtree_size(NodeId v) const { return subtree_size_[checked(v)]; }

  /// Nodes with positive weight, in preorder.
  std::span<const NodeId> important() const noexcept { return important_; }
  bool is_important(NodeId v) const { return weight_[checked(v)] > 0.0; }
  double total_weight() const noexcept { return total_weight_; }

  /// Self-inclusive ancestor test in O(1) via preorder intervals.
  bool is_ancestor(NodeId ancestor, NodeId v) const;

  /// Path from v up to the root, both ends included.
  std::vector<NodeId> ancestors(NodeId v) const;

  /// Records that rebuild this tree (input order, root parent unset).
  std::vector<NodeRecord> records() const;

  bool contains(NodeId v) const noexcept { return v < size(); }

 private:
  NodeId checked(NodeId v) const;
  static WeightedTree assemble(std::span<const NodeRecord> records,
                               std::span<const int> levels);

  NodeId root_ = kNoNode;
  int height_ = 0;
  double total_weight_ = 0.0;
  std::vector<std::string> ids_;
  std::vector<std::string> labels_;
  std::vector<double> weight_;
  std::vector<NodeId> parent_;
  std::vector<std::uint32_t> child_begin_;
  std::vector<NodeId> child_list_;
  std::vector<int> level_;
  std::vector<int> depth_;
  std::vector<NodeId> preorder_;
  std::vector<std::uint32_t> preorder_pos_;
  std::vector<std::uint32_t> subtree_size_;
  std::vector<NodeId> important_;
  std::unordered_map<std::string, NodeId> index_;
};

/// Free-function spellings of the traversal queries.
inline std::vector<NodeId> preorder(const WeightedTree& tree) {
  auto order = tree.preorder();
  return {order.begin(), order.end()};
}

inline std::vector<NodeId> ancestors(const WeightedTree& tree, NodeId v) {
  return tree.ancestors(v);
}

}  // namespace treesum
