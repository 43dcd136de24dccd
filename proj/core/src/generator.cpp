#include "treesum/generator.hpp"

#include <numeric>
#include <string>
#include <vector>

#include "treesum/error.hpp"

namespace treesum {

WeightedTree gen_random_tree(const GenSpec& spec) {
  if (spec.n == 0) throw Error(ErrorCode::kInvalidSpec, "n must be positive");
  if (spec.max_children < 1) throw Error(ErrorCode::kInvalidSpec, "max_children must be >= 1");
  if (!(spec.height_bias > 0.0 && spec.height_bias <= 1.0)) {
    throw Error(ErrorCode::kInvalidSpec, "height_bias must lie in (0, 1]");
  }
  if (spec.important_count > spec.n) {
    throw Error(ErrorCode::kInvalidSpec, "important_count exceeds n");
  }
  if (spec.weight_low < 1 || spec.weight_high < spec.weight_low) {
    throw Error(ErrorCode::kInvalidSpec, "weights must satisfy 1 <= low <= high");
  }

  const std::size_t n = spec.n;
  SplitMix64 rng(spec.seed);
  std::vector<NodeRecord> records(n);
  for (std::size_t i = 0; i < n; ++i) records[i].id = "v" + std::to_string(i);

  // Nodes that can still take a child; position map for O(1) removal.
  std::vector<std::uint32_t> open{0};
  std::vector<std::uint32_t> open_pos(n, 0);
  std::vector<int> child_count(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    std::uint32_t parent;
    if (rng.unit() < spec.height_bias) {
      parent = static_cast<std::uint32_t>(i - 1);
    } else {
      parent = open[rng.below(open.size())];
    }
    records[i].parent = records[parent].id;
    if (++child_count[parent] == spec.max_children) {
      const std::uint32_t pos = open_pos[parent];
      open[pos] = open.back();
      open_pos[open[pos]] = pos;
      open.pop_back();
    }
    open_pos[i] = static_cast<std::uint32_t>(open.size());
    open.push_back(static_cast<std::uint32_t>(i));
  }

  // Partial Fisher-Yates picks the weighted nodes.
  std::vector<std::uint32_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  const auto span = static_cast<std::uint64_t>(spec.weight_high - spec.weight_low) + 1;
  for (std::size_t i = 0; i < spec.important_count; ++i) {
    const std::size_t j = i + rng.below(n - i);
    std::swap(perm[i], perm[j]);
    records[perm[i]].weight = static_cast<double>(spec.weight_low) + static_cast<double>(rng.below(span));
  }
  return WeightedTree::build(records);
}

}  // namespace treesum
