#include "treesum/tree.hpp"

#include <algorithm>
#include <cmath>

#include "treesum/error.hpp"

namespace treesum {

WeightedTree WeightedTree::build(std::span<const NodeRecord> records) {
  return assemble(records, {});
}

WeightedTree WeightedTree::build_with_levels(std::span<const NodeRecord> records,
                                             std::span<const int> levels) {
  if (levels.size() != records.size()) {
    throw Error(ErrorCode::kInvalidSpec, "level array size does not match record count");
  }
  return assemble(records, levels);
}

WeightedTree WeightedTree::assemble(std::span<const NodeRecord> records,
                                    std::span<const int> levels) {
  const std::size_t n = records.size();
  if (n == 0) throw Error(ErrorCode::kNoRoot, "no records");
  if (n >= kNoNode) throw Error(ErrorCode::kInvalidSpec, "too many nodes");

  WeightedTree t;
  t.ids_.reserve(n);
  t.labels_.reserve(n);
  t.weight_.reserve(n);
  t.index_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& rec = records[i];
    if (!t.index_.emplace(rec.id, static_cast<NodeId>(i)).second) {
      throw Error(ErrorCode::kDuplicateId, "duplicate node id '" + rec.id + "'");
    }
    if (!(rec.weight >= 0.0) || !std::isfinite(rec.weight)) {
      throw Error(ErrorCode::kNegativeWeight,
                  "node '" + rec.id + "' has invalid weight " + std::to_string(rec.weight));
    }
    t.ids_.push_back(rec.id);
    t.labels_.push_back(rec.label);
    t.weight_.push_back(rec.weight);
  }

  t.parent_.assign(n, kNoNode);
  std::vector<std::uint32_t> child_count(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& rec = records[i];
    if (!rec.parent) {
      if (t.root_ != kNoNode) {
        throw Error(ErrorCode::kMultipleRoots,
                    "both '" + t.ids_[t.root_] + "' and '" + rec.id + "' have no parent");
      }
      t.root_ = static_cast<NodeId>(i);
      continue;
    }
    auto it = t.index_.find(*rec.parent);
    if (it == t.index_.end()) {
      throw Error(ErrorCode::kOrphanParentReference,
                  "node '" + rec.id + "' references unknown parent '" + *rec.parent + "'");
    }
    t.parent_[i] = it->second;
    ++child_count[it->second];
  }
  if (t.root_ == kNoNode) throw Error(ErrorCode::kNoRoot, "every record has a parent");

  // CSR child lists in input order.
  t.child_begin_.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) t.child_begin_[i + 1] = t.child_begin_[i] + child_count[i];
  t.child_list_.resize(n - 1);
  std::vector<std::uint32_t> fill(t.child_begin_.begin(), t.child_begin_.end() - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (t.parent_[i] != kNoNode) t.child_list_[fill[t.parent_[i]]++] = static_cast<NodeId>(i);
  }

  // Iterative preorder; anything unreached hangs off a cycle.
  t.preorder_.reserve(n);
  t.depth_.assign(n, 0);
  std::vector<NodeId> stack{t.root_};
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    t.preorder_.push_back(v);
    for (auto c = t.child_begin_[v + 1]; c > t.child_begin_[v]; --c) {
      NodeId child = t.child_list_[c - 1];
      t.depth_[child] = t.depth_[v] + 1;
      stack.push_back(child);
    }
  }
  if (t.preorder_.size() != n) {
    throw Error(ErrorCode::kCycleDetected,
                std::to_string(n - t.preorder_.size()) + " node(s) are not reachable from root '" +
                    t.ids_[t.root_] + "'");
  }

  t.preorder_pos_.resize(n);
  for (std::size_t i = 0; i < n; ++i) t.preorder_pos_[t.preorder_[i]] = static_cast<std::uint32_t>(i);

  t.subtree_size_.assign(n, 1);
  for (std::size_t i = n; i-- > 1;) {
    NodeId v = t.preorder_[i];
    t.subtree_size_[t.parent_[v]] += t.subtree_size_[v];
  }

  if (levels.empty()) {
    t.level_ = t.depth_;
  } else {
    t.level_.assign(levels.begin(), levels.end());
    if (t.level_[t.root_] < 0) {
      throw Error(ErrorCode::kInvalidSpec, "root level must be nonnegative");
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (t.parent_[i] != kNoNode && t.level_[i] <= t.level_[t.parent_[i]]) {
        throw Error(ErrorCode::kInvalidSpec,
                    "level of '" + t.ids_[i] + "' does not exceed its parent's level");
      }
    }
  }

  t.height_ = *std::max_element(t.depth_.begin(), t.depth_.end());
  for (NodeId v : t.preorder_) {
    if (t.weight_[v] > 0.0) {
      t.important_.push_back(v);
      t.total_weight_ += t.weight_[v];
    }
  }
  return t;
}

NodeId WeightedTree::checked(NodeId v) const {
  if (v >= size()) {
    throw Error(ErrorCode::kUnknownNode, "node index " + std::to_string(v) + " out of range");
  }
  return v;
}

std::optional<NodeId> WeightedTree::find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

NodeId WeightedTree::at(std::string_view id) const {
  if (auto v = find(id)) return *v;
  throw Error(ErrorCode::kUnknownNode, "no node with id '" + std::string(id) + "'");
}

bool WeightedTree::is_ancestor(NodeId ancestor, NodeId v) const {
  auto a = preorder_pos_[checked(ancestor)];
  auto p = preorder_pos_[checked(v)];
  return a <= p && p < a + subtree_size_[ancestor];
}

std::vector<NodeId> WeightedTree::ancestors(NodeId v) const {
  std::vector<NodeId> path;
  path.reserve(static_cast<std::size_t>(depth(v)) + 1);
  for (NodeId u = v; u != kNoNode; u = parent_[u]) path.push_back(u);
  return path;
}

std::vector<NodeRecord> WeightedTree::records() const {
  std::vector<NodeRecord> out(size());
  for (std::size_t i = 0; i < size(); ++i) {
    out[i].id = ids_[i];
    if (parent_[i] != kNoNode) out[i].parent = ids_[parent_[i]];
    out[i].weight = weight_[i];
    out[i].label = labels_[i];
  }
  return out;
}

}  // namespace treesum
