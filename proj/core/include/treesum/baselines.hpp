#pragma once

#include <cstdint>
#include <vector>

#include "treesum/summary.hpp"
#include "treesum/tree.hpp"

namespace treesum {

inline constexpr std::uint64_t kDefaultEnumerationCap = 100'000'000;

// Aggregate frequency AF(v): total weight of the subtree rooted at v.
std::vector<double> aggregate_frequencies(const WeightedTree& tree);

// Contribution ratio AF(v) / AF(parent(v)); 1 for the root, 0 when the
// parent's aggregate is 0.
std::vector<double> contribution_ratios(const WeightedTree& tree);

// k heaviest nodes. Ties go to the earlier node in preorder.
SummaryResult feq_topk(const WeightedTree& tree, int k);

// k nodes with the largest aggregate frequency.
SummaryResult agg_topk(const WeightedTree& tree, int k);

// Nodes whose contribution ratio is at least theta, then the k largest by
// aggregate frequency among them. When fewer than k qualify the result is
// shorter and flagged `underfilled`.
SummaryResult cagg_topk(const WeightedTree& tree, int k, double theta);

// Exhaustive maximum of g over all k-subsets, enumerated in lexicographic
// preorder-index order; the first subset reaching the maximum wins. Throws
// EnumerationTooLarge when C(n, k) exceeds `cap`.
SummaryResult brute_force(const WeightedTree& tree, int k,
                          std::uint64_t cap = kDefaultEnumerationCap);

// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace treesum
