#include "treesum/lca.hpp"

#include <bit>

#include "treesum/error.hpp"

namespace treesum {

EulerLcaIndex::EulerLcaIndex(const WeightedTree& tree) {
  const std::size_t n = tree.size();
  depth_.resize(n);
  for (NodeId v = 0; v < n; ++v) depth_[v] = tree.depth(v);

  tour_.reserve(2 * n - 1);
  first_.assign(n, 0);

  // (node, next child offset); a node is appended on entry and after each child.
  std::vector<std::pair<NodeId, std::uint32_t>> stack;
  stack.emplace_back(tree.root(), 0);
  first_[tree.root()] = 0;
  tour_.push_back(tree.root());
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    auto kids = tree.children(v);
    if (next < kids.size()) {
      NodeId child = kids[next++];
      first_[child] = static_cast<std::uint32_t>(tour_.size());
      tour_.push_back(child);
      stack.emplace_back(child, 0);
      continue;
    }
    stack.pop_back();
    if (!stack.empty()) tour_.push_back(stack.back().first);
  }

  const std::size_t m = tour_.size();
  table_.emplace_back(m);
  for (std::uint32_t i = 0; i < m; ++i) table_[0][i] = i;
  for (std::size_t stride = 2; stride <= m; stride *= 2) {
    const auto& prev = table_.back();
    std::vector<std::uint32_t> row(m - stride + 1);
    const std::size_t half = stride / 2;
    for (std::size_t i = 0; i < row.size(); ++i) row[i] = shallower(prev[i], prev[i + half]);
    table_.push_back(std::move(row));
  }
}

std::uint32_t EulerLcaIndex::first_occurrence(NodeId v) const {
  if (v >= first_.size()) {
    throw Error(ErrorCode::kUnknownNode, "node index " + std::to_string(v) + " out of range");
  }
  return first_[v];
}

NodeId EulerLcaIndex::lca(NodeId a, NodeId b) const {
  std::uint32_t lo = first_occurrence(a);
  std::uint32_t hi = first_occurrence(b);
  if (lo > hi) std::swap(lo, hi);
  const std::uint32_t len = hi - lo + 1;
  const int row = std::bit_width(len) - 1;
  const auto& t = table_[row];
  return tour_[shallower(t[lo], t[hi + 1 - (1u << row)])];
}

int EulerLcaIndex::distance(NodeId a, NodeId b) const {
  return depth_[a] + depth_[b] - 2 * depth_[lca(a, b)];
}

}  // namespace treesum
