#include "treesum/baselines.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "treesum/error.hpp"
#include "treesum/scoring.hpp"

namespace treesum {

namespace {

void check_k(const WeightedTree& tree, int k) {
  if (k < 1 || static_cast<std::size_t>(k) > tree.size()) {
    throw Error(ErrorCode::kInvalidK, "k=" + std::to_string(k) + " must lie in [1, " +
                                          std::to_string(tree.size()) + "]");
  }
}

// Preorder-stable ranking by descending key; `eligible` filters candidates.
template <typename Eligible>
std::vector<NodeId> top_by(const WeightedTree& tree, const std::vector<double>& key, int k,
                           Eligible eligible) {
  std::vector<NodeId> candidates;
  for (NodeId v : tree.preorder()) {
    if (eligible(v)) candidates.push_back(v);
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&key](NodeId a, NodeId b) { return key[a] > key[b]; });
  if (candidates.size() > static_cast<std::size_t>(k)) candidates.resize(static_cast<std::size_t>(k));
  return candidates;
}

SummaryResult finish(const WeightedTree& tree, std::string algorithm, std::vector<NodeId> selected) {
  SummaryResult result;
  result.algorithm = std::move(algorithm);
  result.selected = std::move(selected);
  result.score = g_score(tree, result.selected);
  return result;
}

}  // namespace

std::vector<double> aggregate_frequencies(const WeightedTree& tree) {
  std::vector<double> af(tree.size(), 0.0);
  const auto order = tree.preorder();
  for (std::size_t i = order.size(); i-- > 0;) {
    const NodeId v = order[i];
    af[v] += tree.weight(v);
    if (const NodeId p = tree.parent(v); p != kNoNode) af[p] += af[v];
  }
  return af;
}

std::vector<double> contribution_ratios(const WeightedTree& tree) {
  const auto af = aggregate_frequencies(tree);
  std::vector<double> ratio(tree.size(), 0.0);
  for (NodeId v = 0; v < tree.size(); ++v) {
    const NodeId p = tree.parent(v);
    if (p == kNoNode) {
      ratio[v] = 1.0;
    } else if (af[p] > 0.0) {
      ratio[v] = af[v] / af[p];
    }
  }
  return ratio;
}

SummaryResult feq_topk(const WeightedTree& tree, int k) {
  check_k(tree, k);
  std::vector<double> w(tree.size());
  for (NodeId v = 0; v < tree.size(); ++v) w[v] = tree.weight(v);
  return finish(tree, "feq", top_by(tree, w, k, [](NodeId) { return true; }));
}

SummaryResult agg_topk(const WeightedTree& tree, int k) {
  check_k(tree, k);
  return finish(tree, "agg", top_by(tree, aggregate_frequencies(tree), k, [](NodeId) { return true; }));
}

SummaryResult cagg_topk(const WeightedTree& tree, int k, double theta) {
  check_k(tree, k);
  if (!(theta >= 0.0 && theta <= 1.0)) {
    throw Error(ErrorCode::kInvalidSpec, "theta must lie in [0, 1]");
  }
  const auto ratio = contribution_ratios(tree);
  auto selected = top_by(tree, aggregate_frequencies(tree), k,
                         [&](NodeId v) { return ratio[v] >= theta; });
  const bool short_result = selected.size() < static_cast<std::size_t>(k);
  auto result = finish(tree, "cagg", std::move(selected));
  result.underfilled = short_result;
  return result;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t c = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // c * (n - k + i) / i stays integral at every step.
    const std::uint64_t g = std::gcd(c, i);
    const std::uint64_t num = (n - k + i) / (i / g);
    const std::uint64_t cc = c / g;
    if (num != 0 && cc > kMax / num) return kMax;
    c = cc * num;
  }
  return c;
}

SummaryResult brute_force(const WeightedTree& tree, int k, std::uint64_t cap) {
  check_k(tree, k);
  const std::size_t n = tree.size();
  const auto total = binomial(n, static_cast<std::uint64_t>(k));
  if (total > cap) {
    throw Error(ErrorCode::kEnumerationTooLarge,
                "C(" + std::to_string(n) + ", " + std::to_string(k) + ") exceeds the cap of " +
                    std::to_string(cap) + " subsets");
  }
  const auto order = tree.preorder();
  std::vector<std::size_t> pick(static_cast<std::size_t>(k));
  std::iota(pick.begin(), pick.end(), 0);
  std::vector<NodeId> current(pick.size());
  std::vector<NodeId> best_set;
  double best = -1.0;
  while (true) {
    for (std::size_t i = 0; i < pick.size(); ++i) current[i] = order[pick[i]];
    const double score = g_score(tree, current);
    if (score > best + kScoreTolerance) {
      best = score;
      best_set = current;
    }
    // next combination
    std::size_t i = pick.size();
    while (i > 0 && pick[i - 1] == n - pick.size() + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < pick.size(); ++j) pick[j] = pick[j - 1] + 1;
  }
  return finish(tree, "brute", std::move(best_set));
}

}  // namespace treesum
