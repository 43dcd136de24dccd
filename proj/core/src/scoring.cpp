#include "treesum/scoring.hpp"

#include <algorithm>

#include "treesum/error.hpp"

namespace treesum {

namespace {

// Correlation from a level gap; callers guarantee ancestry.
inline double cor_from_gap(int gap) { return 1.0 / static_cast<double>(gap + 1); }

void require_node(const WeightedTree& tree, NodeId v) {
  if (!tree.contains(v)) {
    throw Error(ErrorCode::kUnknownNode, "node index " + std::to_string(v) + " out of range");
  }
}

}  // namespace

SummarySet::SummarySet(std::size_t universe, std::span<const NodeId> members)
    : flags_(universe, 0) {
  for (NodeId v : members) insert(v);
}

bool SummarySet::insert(NodeId v) {
  if (v >= flags_.size()) {
    throw Error(ErrorCode::kUnknownNode, "node index " + std::to_string(v) + " out of range");
  }
  if (flags_[v]) return false;
  flags_[v] = 1;
  members_.push_back(v);
  return true;
}

double cor(const WeightedTree& tree, NodeId x, NodeId y) {
  require_node(tree, x);
  require_node(tree, y);
  if (!tree.is_ancestor(x, y)) return 0.0;
  return cor_from_gap(tree.level(y) - tree.level(x));
}

double rep(const WeightedTree& tree, NodeId x, NodeId y) {
  return tree.weight(y) * cor(tree, x, y);
}

double smy(const WeightedTree& tree, const SummarySet& s, NodeId y) {
  require_node(tree, y);
  const double w = tree.weight(y);
  const int ly = tree.level(y);
  double best = 0.0;
  for (NodeId x = y; x != kNoNode; x = tree.parent(x)) {
    if (s.contains(x)) best = std::max(best, w * cor_from_gap(ly - tree.level(x)));
  }
  return best;
}

double g_score(const WeightedTree& tree, const SummarySet& s) {
  double total = 0.0;
  for (NodeId y : tree.important()) total += smy(tree, s, y);
  return total;
}

double g_score(const WeightedTree& tree, std::span<const NodeId> members) {
  return g_score(tree, SummarySet(tree.size(), members));
}

NodeId nearest_selected_ancestor(const WeightedTree& tree, const SummarySet& s, NodeId v) {
  for (NodeId u = tree.parent(v); u != kNoNode; u = tree.parent(u)) {
    if (s.contains(u)) return u;
  }
  return kNoNode;
}

double marginal_gain_fast(const WeightedTree& tree, const SummarySet& s, NodeId x) {
  require_node(tree, x);
  if (s.contains(x)) {
    throw Error(ErrorCode::kAlreadySelected, "node '" + tree.id(x) + "' is already selected");
  }
  const NodeId z = nearest_selected_ancestor(tree, s, x);
  const int level_x = tree.level(x);
  const int level_z = z == kNoNode ? 0 : tree.level(z);

  auto order = tree.preorder();
  const std::size_t begin = tree.preorder_index(x);
  const std::size_t end = begin + tree.subtree_size(x);
  double gain = 0.0;
  for (std::size_t i = begin; i < end;) {
    const NodeId y = order[i];
    if (y != x && s.contains(y)) {
      i += tree.subtree_size(y);
      continue;
    }
    const double w = tree.weight(y);
    if (w > 0.0) {
      const int ly = tree.level(y);
      double delta = cor_from_gap(ly - level_x);
      if (z != kNoNode) delta -= cor_from_gap(ly - level_z);
      gain += w * delta;
    }
    ++i;
  }
  return gain;
}

double marginal_gain_naive(const WeightedTree& tree, const SummarySet& s, NodeId x) {
  require_node(tree, x);
  if (s.contains(x)) {
    throw Error(ErrorCode::kAlreadySelected, "node '" + tree.id(x) + "' is already selected");
  }
  SummarySet with_x = s;
  with_x.insert(x);
  return g_score(tree, with_x) - g_score(tree, s);
}

}  // namespace treesum
