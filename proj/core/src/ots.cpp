#include "treesum/ots.hpp"

#include <algorithm>
#include <cmath>

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

}  // namespace

OtsSolver::OtsSolver(const WeightedTree& tree, int k) : tree_(tree), k_(k) {
  check_k(tree, k);
  const std::size_t n = tree.size();
  cap_.resize(n);
  offset_.resize(n);
  std::size_t total = 0;
  for (NodeId u = 0; u < n; ++u) {
    cap_[u] = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(k), tree.subtree_size(u)));
    offset_[u] = total;
    total += static_cast<std::size_t>(tree.depth(u) + 1) * static_cast<std::size_t>(cap_[u] + 1);
  }
  value_.assign(total, 0.0);
  choice_.assign(total, DpChoice::kNo);
  solve();
}

std::size_t OtsSolver::slot_of(NodeId u, NodeId na) const {
  if (!tree_.contains(u)) {
    throw Error(ErrorCode::kUnknownNode, "node index " + std::to_string(u) + " out of range");
  }
  if (na == kNoNode) return 0;
  if (!tree_.contains(na) || na == u || !tree_.is_ancestor(na, u)) {
    throw Error(ErrorCode::kInvalidSpec, "nearest selected ancestor must be a strict ancestor of '" +
                                             tree_.id(u) + "'");
  }
  return static_cast<std::size_t>(tree_.depth(na)) + 1;
}

double OtsSolver::smy_from(NodeId u, NodeId na) const {
  if (na == kNoNode) return 0.0;
  return tree_.weight(u) / static_cast<double>(tree_.level(u) - tree_.level(na) + 1);
}

void OtsSolver::knapsack_all(std::span<const NodeId> children, std::size_t child_slot,
                             int max_budget, std::vector<double>& out,
                             std::vector<double>& scratch) const {
  out.assign(static_cast<std::size_t>(max_budget) + 1, 0.0);
  for (NodeId x : children) {
    scratch.assign(out.size(), 0.0);
    const int cap = cap_[x];
    const std::size_t base = offset_[x] + child_slot * static_cast<std::size_t>(cap + 1);
    for (int b = 0; b <= max_budget; ++b) {
      const int top = std::min(b, cap);
      double best = out[b] + value_[base];
      for (int j = 1; j <= top; ++j) {
        const double candidate = out[b - j] + value_[base + j];
        if (candidate > best) best = candidate;
      }
      scratch[b] = best;
    }
    out.swap(scratch);
  }
}

void OtsSolver::solve() {
  const auto order = tree_.preorder();
  std::vector<int> ancestor_level;
  std::vector<double> yes_knap, no_knap, scratch;
  for (std::size_t i = order.size(); i-- > 0;) {
    const NodeId u = order[i];
    const int d = tree_.depth(u);
    const int cap = cap_[u];
    const double w = tree_.weight(u);
    const int lu = tree_.level(u);
    const auto kids = tree_.children(u);

    ancestor_level.assign(static_cast<std::size_t>(d), 0);
    int dd = d - 1;
    for (NodeId a = tree_.parent(u); a != kNoNode; a = tree_.parent(a), --dd) {
      ancestor_level[static_cast<std::size_t>(dd)] = tree_.level(a);
    }

    // Selecting u makes u the nearest ancestor of every child: their slot d + 1.
    // This part is shared by all of u's ancestor slots.
    if (cap >= 1) knapsack_all(kids, static_cast<std::size_t>(d) + 1, cap - 1, yes_knap, scratch);

    for (std::size_t slot = 0; slot <= static_cast<std::size_t>(d); ++slot) {
      knapsack_all(kids, slot, cap, no_knap, scratch);
      const double smy_u =
          slot == 0 ? 0.0 : w / static_cast<double>(lu - ancestor_level[slot - 1] + 1);
      const std::size_t base = offset_[u] + slot * static_cast<std::size_t>(cap + 1);
      value_[base] = smy_u + no_knap[0];
      choice_[base] = DpChoice::kNo;
      for (int b = 1; b <= cap; ++b) {
        const double no_value = smy_u + no_knap[b];
        const double yes_value = w + yes_knap[b - 1];
        if (yes_value > no_value) {
          value_[base + b] = yes_value;
          choice_[base + b] = DpChoice::kYes;
        } else {
          value_[base + b] = no_value;
          choice_[base + b] = DpChoice::kNo;
        }
      }
    }
  }
}

double OtsSolver::optimum() const { return value_[cell(tree_.root(), 0, k_)]; }

double OtsSolver::value(const DpKey& key) const {
  const std::size_t slot = slot_of(key.node, key.nearest_selected_ancestor);
  if (key.budget < 0 || key.budget > k_) {
    throw Error(ErrorCode::kInvalidSpec, "budget " + std::to_string(key.budget) +
                                             " outside [0, " + std::to_string(k_) + "]");
  }
  return value_[cell(key.node, slot, key.budget)];
}

KnapsackResult OtsSolver::knapsack_combine(std::span<const NodeId> children, int budget,
                                           NodeId na) const {
  if (budget < 0 || budget > k_) {
    throw Error(ErrorCode::kInvalidSpec, "budget " + std::to_string(budget) + " outside [0, " +
                                             std::to_string(k_) + "]");
  }
  const std::size_t l = children.size();
  const std::size_t width = static_cast<std::size_t>(budget) + 1;
  // best[i][b]: children i.. with budget b. Filled from the back so the
  // forward walk can hand each child the smallest optimal budget.
  std::vector<double> best((l + 1) * width, 0.0);
  std::vector<int> pick(l * width, 0);
  for (std::size_t i = l; i-- > 0;) {
    const NodeId x = children[i];
    const std::size_t slot = slot_of(x, na);
    const int top_cap = cap_[x];
    for (int b = 0; b <= budget; ++b) {
      double top = value_[cell(x, slot, 0)] + best[(i + 1) * width + b];
      int arg = 0;
      for (int j = 1; j <= std::min(b, top_cap); ++j) {
        const double candidate = value_[cell(x, slot, j)] + best[(i + 1) * width + (b - j)];
        if (candidate > top) {
          top = candidate;
          arg = j;
        }
      }
      best[i * width + b] = top;
      pick[i * width + b] = arg;
    }
  }
  KnapsackResult result;
  result.value = best[static_cast<std::size_t>(budget)];
  result.split.resize(l);
  int remaining = budget;
  for (std::size_t i = 0; i < l; ++i) {
    result.split[i] = pick[i * width + remaining];
    remaining -= result.split[i];
  }
  return result;
}

double OtsSolver::yes_case(const DpKey& key) const {
  slot_of(key.node, key.nearest_selected_ancestor);
  if (key.budget < 1 || key.budget > k_) {
    throw Error(ErrorCode::kInvalidSpec, "yes-case needs a budget in [1, k]");
  }
  const int b = std::min(key.budget, cap_[key.node]);
  return tree_.weight(key.node) +
         knapsack_combine(tree_.children(key.node), b - 1, key.node).value;
}

double OtsSolver::no_case(const DpKey& key) const {
  slot_of(key.node, key.nearest_selected_ancestor);
  if (key.budget < 0 || key.budget > k_) {
    throw Error(ErrorCode::kInvalidSpec, "budget outside [0, k]");
  }
  const int b = std::min(key.budget, cap_[key.node]);
  return smy_from(key.node, key.nearest_selected_ancestor) +
         knapsack_combine(tree_.children(key.node), b, key.nearest_selected_ancestor).value;
}

DpEntry OtsSolver::dp_eval(const DpKey& key) const {
  DpEntry entry;
  entry.value = value(key);
  const NodeId u = key.node;
  const int b = std::min(key.budget, cap_[u]);
  entry.choice = choice_[cell(u, slot_of(u, key.nearest_selected_ancestor), b)];
  if (entry.choice == DpChoice::kYes) {
    entry.split = knapsack_combine(tree_.children(u), b - 1, u).split;
  } else {
    entry.split = knapsack_combine(tree_.children(u), b, key.nearest_selected_ancestor).split;
  }
  return entry;
}

std::vector<NodeId> OtsSolver::reconstruct(int budget) const {
  if (budget < 0 || budget > k_) {
    throw Error(ErrorCode::kInvalidSpec, "budget outside [0, k]");
  }
  std::vector<NodeId> selected;
  std::vector<DpKey> pending{{tree_.root(), budget, kNoNode}};
  while (!pending.empty()) {
    const DpKey key = pending.back();
    pending.pop_back();
    const NodeId u = key.node;
    const int b = std::min(key.budget, cap_[u]);
    if (b == 0) continue;  // nothing selected below
    const DpChoice choice = choice_[cell(u, slot_of(u, key.nearest_selected_ancestor), b)];
    int child_budget = b;
    NodeId child_na = key.nearest_selected_ancestor;
    if (choice == DpChoice::kYes) {
      selected.push_back(u);
      child_budget = b - 1;
      child_na = u;
    }
    const auto kids = tree_.children(u);
    const auto split = knapsack_combine(kids, child_budget, child_na).split;
    for (std::size_t i = 0; i < kids.size(); ++i) {
      if (split[i] > 0) pending.push_back({kids[i], split[i], child_na});
    }
  }
  if (selected.size() > static_cast<std::size_t>(budget)) {
    throw Error(ErrorCode::kInconsistentMemo, "reconstruction exceeded its budget");
  }
  std::sort(selected.begin(), selected.end(), [this](NodeId a, NodeId b) {
    return tree_.preorder_index(a) < tree_.preorder_index(b);
  });
  return selected;
}

SummaryResult ots(const WeightedTree& tree, int k) {
  const OtsSolver solver(tree, k);
  SummaryResult result;
  result.algorithm = "ots";
  result.selected = solver.reconstruct();

  SummarySet set(tree.size(), result.selected);
  for (NodeId v : tree.preorder()) {
    if (set.size() >= static_cast<std::size_t>(k)) break;
    if (set.insert(v)) result.selected.push_back(v);
  }
  std::sort(result.selected.begin(), result.selected.end(), [&tree](NodeId a, NodeId b) {
    return tree.preorder_index(a) < tree.preorder_index(b);
  });

  result.score = g_score(tree, set);
  const double optimum = solver.optimum();
  if (std::abs(result.score - optimum) > kScoreTolerance * std::max(1.0, std::abs(optimum))) {
    throw Error(ErrorCode::kInconsistentMemo,
                "reconstructed score " + std::to_string(result.score) +
                    " differs from optimum " + std::to_string(optimum));
  }
  return result;
}

}  // namespace treesum
