#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "treesum/metrics.hpp"
#include "treesum/summary.hpp"
#include "treesum/tree.hpp"

namespace treesum::cli {

// Process exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitData = 3;
inline constexpr int kExitResource = 4;

struct RunReport {
  std::string input;
  std::string algorithm;
  int k = 0;
  bool reduced = false;
  double score = 0.0;
  std::vector<std::string> selected;
  std::vector<NodeId> selected_nodes;
  double elapsed_ms = 0.0;
  bool underfilled = false;
  std::vector<TraceStep> trace;
  std::optional<MetricsReport> metrics;
};

// Loads a tree file; when "<path>.levels" exists next to it (as written by
// `treesum reduce`) the original levels are restored from it.
WeightedTree load_tree(const std::string& path);

// Runs one summarizer. With `reduce` the tree is first cut down by vtree()
// and the result lifted back; elapsed_ms covers reduction plus algorithm.
RunReport summarize(const WeightedTree& tree, const std::string& input,
                    const std::string& algo, int k, double theta, bool reduce);

std::string to_json(const WeightedTree& tree, const RunReport& report);
std::string metrics_json(const MetricsReport& report, bool has_cd);

// Graphviz digraph of a summary: members in preorder, each linked from its
// lowest selected proper ancestor. Members without one hang off a synthetic
// virtual root, which is omitted when the tree root itself is selected.
std::string summary_dot(const WeightedTree& tree, const std::vector<NodeId>& summary);

// "a,b,c" id list, or the path of a JSON run report whose "selected" is used.
std::vector<NodeId> resolve_summary(const WeightedTree& tree, const std::string& spec);

// Full command line entry point; never throws.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace treesum::cli
