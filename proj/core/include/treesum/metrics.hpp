#pragma once

#include <span>
#include <string>

#include "treesum/lca.hpp"
#include "treesum/tree.hpp"

namespace treesum {

// Summary quality measures. Always evaluated on the original tree.
struct MetricsReport {
  double cd = 0.0;   // closeness distance
  double ald = 0.0;  // average level difference
  double wc = 0.0;   // weighted coverage
  int k = 0;
  std::string algorithm;
};

// Sum over important y of feq(y) times the hop distance to the closest
// member of S. Throws EmptySummary for an empty S.
double closeness_distance(const WeightedTree& tree, const EulerLcaIndex& index,
                          std::span<const NodeId> summary);

// Weighted mean, over important y, of the level gap to the deepest selected
// ancestor of y (l(y) itself when none is selected). Throws NoImportantNodes
// when the tree carries no weight.
double avg_level_difference(const WeightedTree& tree, std::span<const NodeId> summary);

// Total weight of important nodes that are selected or a child of a
// selected node.
double weighted_coverage(const WeightedTree& tree, std::span<const NodeId> summary);

// All three at once. cd is only computed for a nonempty summary.
MetricsReport compute_metrics(const WeightedTree& tree, const EulerLcaIndex& index,
                              std::span<const NodeId> summary, std::string algorithm = {});

}  // namespace treesum
