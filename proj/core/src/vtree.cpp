#include "treesum/vtree.hpp"

#include <algorithm>
#include <cmath>

#include "treesum/error.hpp"
#include "treesum/scoring.hpp"

namespace treesum {

int ReducedTree::edge_weight(NodeId reduced_child) const {
  const NodeId p = tree.parent(reduced_child);
  return p == kNoNode ? 0 : tree.level(reduced_child) - tree.level(p);
}

ReducedTree vtree(const WeightedTree& tree) { return vtree(tree, EulerLcaIndex(tree)); }

ReducedTree vtree(const WeightedTree& tree, const EulerLcaIndex& index) {
  const std::size_t n = tree.size();
  std::vector<std::uint8_t> keep(n, 0);
  keep[tree.root()] = 1;
  const auto important = tree.important();
  for (std::size_t i = 0; i < important.size(); ++i) {
    keep[important[i]] = 1;
    if (i + 1 < important.size()) keep[index.lca(important[i], important[i + 1])] = 1;
  }

  // Nearest kept proper ancestor, resolved top-down in preorder.
  std::vector<NodeId> kept_above(n, kNoNode);
  ReducedTree out;
  std::vector<NodeRecord> records;
  std::vector<int> levels;
  for (NodeId v : tree.preorder()) {
    const NodeId p = tree.parent(v);
    if (p != kNoNode) kept_above[v] = keep[p] ? p : kept_above[p];
    if (!keep[v]) continue;
    NodeRecord rec;
    rec.id = tree.id(v);
    if (kept_above[v] != kNoNode) rec.parent = tree.id(kept_above[v]);
    rec.weight = tree.weight(v);
    rec.label = tree.label(v);
    records.push_back(std::move(rec));
    levels.push_back(tree.level(v));
    out.original.push_back(v);
  }
  out.tree = WeightedTree::build_with_levels(records, levels);
  return out;
}

SummaryResult lift_result(const WeightedTree& source, const ReducedTree& reduced,
                          const SummaryResult& result) {
  SummaryResult lifted = result;
  for (NodeId& v : lifted.selected) v = reduced.original.at(v);
  for (TraceStep& step : lifted.trace) step.node = reduced.original.at(step.node);
  lifted.score = g_score(source, lifted.selected);
  if (std::abs(lifted.score - result.score) >
      kScoreTolerance * std::max(1.0, std::abs(result.score))) {
    throw Error(ErrorCode::kScoreMismatch,
                "score on the reduced tree " + std::to_string(result.score) +
                    " differs from the source tree score " + std::to_string(lifted.score));
  }
  return lifted;
}

}  // namespace treesum
