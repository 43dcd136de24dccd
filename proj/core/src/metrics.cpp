#include "treesum/metrics.hpp"

#include <algorithm>
#include <limits>

#include "treesum/error.hpp"
#include "treesum/scoring.hpp"

namespace treesum {

double closeness_distance(const WeightedTree& tree, const EulerLcaIndex& index,
                          std::span<const NodeId> summary) {
  if (summary.empty()) throw Error(ErrorCode::kEmptySummary, "closeness distance needs a summary");
  for (NodeId x : summary) {
    if (!tree.contains(x)) throw Error(ErrorCode::kUnknownNode, "summary node out of range");
  }
  double total = 0.0;
  for (NodeId y : tree.important()) {
    int nearest = std::numeric_limits<int>::max();
    for (NodeId x : summary) nearest = std::min(nearest, index.distance(x, y));
    total += static_cast<double>(nearest) * tree.weight(y);
  }
  return total;
}

double avg_level_difference(const WeightedTree& tree, std::span<const NodeId> summary) {
  if (tree.total_weight() <= 0.0) {
    throw Error(ErrorCode::kNoImportantNodes, "average level difference needs positive weights");
  }
  const SummarySet s(tree.size(), summary);
  double total = 0.0;
  for (NodeId y : tree.important()) {
    int gap = tree.level(y);
    for (NodeId x = y; x != kNoNode; x = tree.parent(x)) {
      if (s.contains(x)) {
        gap = tree.level(y) - tree.level(x);
        break;
      }
    }
    total += static_cast<double>(gap) * tree.weight(y);
  }
  return total / tree.total_weight();
}

double weighted_coverage(const WeightedTree& tree, std::span<const NodeId> summary) {
  const SummarySet s(tree.size(), summary);
  double total = 0.0;
  for (NodeId y : tree.important()) {
    const NodeId p = tree.parent(y);
    if (s.contains(y) || (p != kNoNode && s.contains(p))) total += tree.weight(y);
  }
  return total;
}

MetricsReport compute_metrics(const WeightedTree& tree, const EulerLcaIndex& index,
                              std::span<const NodeId> summary, std::string algorithm) {
  MetricsReport report;
  report.k = static_cast<int>(summary.size());
  report.algorithm = std::move(algorithm);
  if (!summary.empty()) report.cd = closeness_distance(tree, index, summary);
  report.ald = avg_level_difference(tree, summary);
  report.wc = weighted_coverage(tree, summary);
  return report;
}

}  // namespace treesum
