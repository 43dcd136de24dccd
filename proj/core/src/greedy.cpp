#include "treesum/greedy.hpp"

#include <algorithm>
#include <queue>
#include <vector>

#include "treesum/error.hpp"
#include "treesum/scoring.hpp"

namespace treesum {

namespace {

struct Candidate {
  double bound;  // gain measured in round `round`; an upper bound afterwards
  int round;
  NodeId node;
  std::size_t pre;
};

struct LowerPriority {
  bool operator()(const Candidate& a, const Candidate& b) const {
    if (a.bound != b.bound) return a.bound < b.bound;
    return a.pre > b.pre;
  }
};

}  // namespace

SummaryResult gts(const WeightedTree& tree, int k) {
  if (k < 1 || static_cast<std::size_t>(k) > tree.size()) {
    throw Error(ErrorCode::kInvalidK, "k=" + std::to_string(k) + " must lie in [1, " +
                                          std::to_string(tree.size()) + "]");
  }
  SummaryResult result;
  result.algorithm = "gts";
  SummarySet selected(tree.size());

  std::vector<Candidate> initial;
  initial.reserve(tree.size());
  for (NodeId x : tree.preorder()) {
    initial.push_back({marginal_gain_fast(tree, selected, x), 0, x, tree.preorder_index(x)});
  }
  std::priority_queue<Candidate, std::vector<Candidate>, LowerPriority> heap(LowerPriority{},
                                                                            std::move(initial));
  auto refresh = [&](Candidate c, int round) {
    c.bound = marginal_gain_fast(tree, selected, c.node);
    c.round = round;
    heap.push(c);
  };

  std::vector<Candidate> ties;
  for (int round = 0; round < k; ++round) {
    // Gains only shrink as S grows, so once the top entry is current it is
    // the round's maximum.
    while (heap.top().round != round) {
      const Candidate c = heap.top();
      heap.pop();
      refresh(c, round);
    }
    double best = heap.top().bound;

    // Everything within tolerance of the maximum is a tie; bring those
    // entries up to date and keep the earliest in preorder.
    ties.clear();
    while (!heap.empty() && heap.top().bound >= best - kScoreTolerance) {
      const Candidate c = heap.top();
      heap.pop();
      if (c.round == round) {
        ties.push_back(c);
        best = std::max(best, c.bound);
      } else {
        refresh(c, round);
      }
    }
    auto chosen = std::min_element(ties.begin(), ties.end(), [&](const Candidate& a, const Candidate& b) {
      const bool a_tied = a.bound >= best - kScoreTolerance;
      const bool b_tied = b.bound >= best - kScoreTolerance;
      if (a_tied != b_tied) return a_tied;
      return a.pre < b.pre;
    });
    for (auto it = ties.begin(); it != ties.end(); ++it) {
      if (it != chosen) heap.push(*it);
    }
    selected.insert(chosen->node);
    result.selected.push_back(chosen->node);
    result.trace.push_back({chosen->node, chosen->bound});
  }
  result.score = g_score(tree, selected);
  return result;
}

}  // namespace treesum
