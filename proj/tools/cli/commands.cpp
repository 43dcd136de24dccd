#include "commands.hpp"

#include <glob.h>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "CLI11.hpp"
#include "treesum/treesum.hpp"

namespace treesum::cli {

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

bool uses_reduction_by_default(const std::string& algo) { return algo == "gts" || algo == "ots"; }

const std::vector<std::string> kAlgorithms{"gts", "ots", "feq", "agg", "cagg", "brute"};

SummaryResult run_algorithm(const WeightedTree& tree, const std::string& algo, int k,
                            double theta) {
  if (algo == "gts") return gts(tree, k);
  if (algo == "ots") return ots(tree, k);
  if (algo == "feq") return feq_topk(tree, k);
  if (algo == "agg") return agg_topk(tree, k);
  if (algo == "cagg") return cagg_topk(tree, k, theta);
  if (algo == "brute") return brute_force(tree, k);
  throw Error(ErrorCode::kInvalidSpec, "unknown algorithm '" + algo + "'");
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write '" + path + "'");
  out << text;
  if (!out) throw Error(ErrorCode::kIoError, "write to '" + path + "' failed");
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ',';
    out += items[i];
  }
  return out;
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidK:
    case ErrorCode::kInvalidSpec:
      return kExitUsage;
    case ErrorCode::kEnumerationTooLarge:
      return kExitResource;
    default:
      return kExitData;
  }
}

std::vector<std::string> expand_globs(const std::vector<std::string>& patterns) {
  std::vector<std::string> files;
  for (const auto& pattern : patterns) {
    glob_t g{};
    const int rc = ::glob(pattern.c_str(), 0, nullptr, &g);
    if (rc == 0) {
      for (std::size_t i = 0; i < g.gl_pathc; ++i) files.emplace_back(g.gl_pathv[i]);
    }
    globfree(&g);
    if (rc != 0 && rc != GLOB_NOMATCH) {
      throw Error(ErrorCode::kIoError, "cannot expand '" + pattern + "'");
    }
  }
  std::sort(files.begin(), files.end());
  files.erase(std::unique(files.begin(), files.end()), files.end());
  return files;
}

}  // namespace

WeightedTree load_tree(const std::string& path) {
  const fs::path levels = path + ".levels";
  if (fs::exists(levels)) return parse_tree_with_levels(path, levels);
  return parse_tree_tsv(path);
}

RunReport summarize(const WeightedTree& tree, const std::string& input, const std::string& algo,
                    int k, double theta, bool reduce) {
  RunReport report;
  report.input = input;
  report.algorithm = algo;
  report.k = k;
  report.reduced = reduce;

  if (k < 1 || static_cast<std::size_t>(k) > tree.size()) {
    throw Error(ErrorCode::kInvalidK, "k=" + std::to_string(k) + " must lie in [1, " +
                                          std::to_string(tree.size()) + "]");
  }
  SummaryResult result;
  const auto start = Clock::now();
  if (reduce) {
    const auto reduced = vtree(tree);
    if (static_cast<std::size_t>(k) > reduced.size()) {
      throw Error(ErrorCode::kInvalidK,
                  "k=" + std::to_string(k) + " exceeds the reduced tree size " +
                      std::to_string(reduced.size()) + "; rerun with --no-reduce");
    }
    result = lift_result(tree, reduced, run_algorithm(reduced.tree, algo, k, theta));
  } else {
    result = run_algorithm(tree, algo, k, theta);
  }
  report.elapsed_ms = ms_since(start);

  report.score = g_score(tree, std::span<const NodeId>(result.selected));
  report.selected_nodes = result.selected;
  for (NodeId v : result.selected) report.selected.push_back(tree.id(v));
  report.underfilled = result.underfilled;
  report.trace = result.trace;
  return report;
}

std::string metrics_json(const MetricsReport& m, bool has_cd) {
  json j;
  j["cd"] = has_cd ? json(m.cd) : json(nullptr);
  j["ald"] = m.ald;
  j["wc"] = m.wc;
  j["k"] = m.k;
  if (!m.algorithm.empty()) j["algorithm"] = m.algorithm;
  return j.dump(2);
}

std::string to_json(const WeightedTree& tree, const RunReport& r) {
  json j;
  j["input"] = r.input;
  j["algorithm"] = r.algorithm;
  j["k"] = r.k;
  j["reduced"] = r.reduced;
  j["score"] = r.score;
  j["selected"] = r.selected;
  j["elapsed_ms"] = r.elapsed_ms;
  j["underfilled"] = r.underfilled;
  json trace = json::array();
  for (const auto& step : r.trace) trace.push_back({{"node", tree.id(step.node)}, {"gain", step.gain}});
  j["trace"] = trace;
  if (r.metrics) {
    j["metrics"] = json::parse(metrics_json(*r.metrics, !r.selected.empty()));
  } else {
    j["metrics"] = nullptr;
  }
  return j.dump(2) + "\n";
}

std::vector<NodeId> resolve_summary(const WeightedTree& tree, const std::string& spec) {
  std::vector<std::string> names;
  if (!spec.empty() && fs::is_regular_file(spec)) {
    std::ifstream in(spec);
    json j;
    try {
      j = json::parse(in);
      names = j.at("selected").get<std::vector<std::string>>();
    } catch (const json::exception& e) {
      throw Error(ErrorCode::kMalformedLine, "'" + spec + "' is not a run report: " + e.what());
    }
  } else {
    names = split_list(spec);
  }
  std::vector<NodeId> out;
  for (const auto& name : names) {
    const NodeId v = tree.at(name);
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  return out;
}

std::string summary_dot(const WeightedTree& tree, const std::vector<NodeId>& summary) {
  std::vector<NodeId> members(summary);
  std::sort(members.begin(), members.end(), [&](NodeId a, NodeId b) {
    return tree.preorder_index(a) < tree.preorder_index(b);
  });
  const SummarySet set(tree.size(), members);
  const std::string virtual_root = "__virtual_root__";
  const bool root_selected = set.contains(tree.root());

  std::ostringstream out;
  out << "digraph summary {\n";
  out << "  node [shape=box];\n";
  if (!root_selected && !members.empty()) {
    out << "  " << dot_quote(virtual_root) << " [label=\"virtual root\", shape=point];\n";
  }
  for (NodeId v : members) {
    out << "  " << dot_quote(tree.id(v)) << " [label="
        << dot_quote(tree.id(v) + " (" + format_weight(tree.weight(v)) + ")") << "];\n";
  }
  for (NodeId v : members) {
    const NodeId up = nearest_selected_ancestor(tree, set, v);
    if (up != kNoNode) {
      out << "  " << dot_quote(tree.id(up)) << " -> " << dot_quote(tree.id(v)) << ";\n";
    } else if (!root_selected) {
      out << "  " << dot_quote(virtual_root) << " -> " << dot_quote(tree.id(v)) << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tree summarization: pick k nodes that best represent a weighted tree."};
  app.name("treesum");
  app.require_subcommand(1);

  std::function<void()> action;

  // summarize
  std::string sum_input, sum_algo = "gts", sum_out;
  int sum_k = 5;
  double sum_theta = 0.4;
  bool sum_reduce = true;
  auto* summarize_cmd = app.add_subcommand("summarize", "Select k summary nodes");
  summarize_cmd->add_option("input", sum_input, "Tree file (TSV)")->required();
  summarize_cmd->add_option("--algo", sum_algo, "gts | ots | feq | agg | cagg | brute")
      ->check(CLI::IsMember(kAlgorithms))
      ->capture_default_str();
  summarize_cmd->add_option("--k", sum_k, "Summary size")->capture_default_str();
  summarize_cmd->add_option("--theta", sum_theta, "Contribution threshold for cagg")
      ->capture_default_str();
  auto* reduce_flag = summarize_cmd->add_flag(
      "--reduce,!--no-reduce", sum_reduce, "Run on the reduced tree (default for gts and ots)");
  summarize_cmd->add_option("--out", sum_out, "Write the JSON run report here");
  summarize_cmd->callback([&] {
    action = [&] {
      const bool reduce = reduce_flag->count() ? sum_reduce : uses_reduction_by_default(sum_algo);
      if (reduce && !uses_reduction_by_default(sum_algo)) {
        throw Error(ErrorCode::kInvalidSpec, "--reduce only applies to gts and ots");
      }
      const auto tree = load_tree(sum_input);
      auto report = summarize(tree, sum_input, sum_algo, sum_k, sum_theta, reduce);
      const EulerLcaIndex index(tree);
      report.metrics = compute_metrics(tree, index, report.selected_nodes, sum_algo);
      out << "score " << report.score << "\n";
      out << "selected " << join(report.selected) << "\n";
      out << "elapsed_ms " << report.elapsed_ms << "\n";
      if (report.underfilled) out << "underfilled: fewer than k nodes qualified\n";
      if (!sum_out.empty()) write_file(sum_out, to_json(tree, report));
    };
  });

  // metrics
  std::string met_input, met_summary, met_out;
  auto* metrics_cmd = app.add_subcommand("metrics", "Evaluate a summary with CD, ALD and WC");
  metrics_cmd->add_option("input", met_input, "Tree file (TSV)")->required();
  metrics_cmd->add_option("--summary", met_summary, "Comma-separated ids or a JSON run report")
      ->required();
  metrics_cmd->add_option("--out", met_out, "Also write the JSON here");
  metrics_cmd->callback([&] {
    action = [&] {
      const auto tree = load_tree(met_input);
      const auto summary = resolve_summary(tree, met_summary);
      const EulerLcaIndex index(tree);
      const auto report = compute_metrics(tree, index, summary);
      if (summary.empty()) err << "note: cd is undefined for an empty summary\n";
      const auto text = metrics_json(report, !summary.empty()) + "\n";
      out << text;
      if (!met_out.empty()) write_file(met_out, text);
    };
  });

  // viz
  std::string viz_input, viz_summary, viz_out;
  auto* viz_cmd = app.add_subcommand("viz", "Export a summary as a Graphviz digraph");
  viz_cmd->add_option("input", viz_input, "Tree file (TSV)")->required();
  viz_cmd->add_option("--summary", viz_summary, "Comma-separated ids or a JSON run report")
      ->required();
  viz_cmd->add_option("--out", viz_out, "DOT output path (stdout when omitted)");
  viz_cmd->callback([&] {
    action = [&] {
      const auto tree = load_tree(viz_input);
      const auto dot = summary_dot(tree, resolve_summary(tree, viz_summary));
      if (viz_out.empty()) {
        out << dot;
      } else {
        write_file(viz_out, dot);
      }
    };
  });

  // reduce
  std::string red_input, red_out;
  auto* reduce_cmd = app.add_subcommand("reduce", "Write the reduced tree and its level sidecar");
  reduce_cmd->add_option("input", red_input, "Tree file (TSV)")->required();
  reduce_cmd->add_option("--out", red_out, "Output tree path; levels go to <out>.levels")
      ->required();
  reduce_cmd->callback([&] {
    action = [&] {
      const auto tree = load_tree(red_input);
      const auto reduced = vtree(tree);
      write_tree_tsv(reduced.tree, fs::path(red_out));
      write_levels_tsv(reduced.tree, red_out + ".levels");
      out << "nodes " << tree.size() << "\n";
      out << "important " << tree.important().size() << "\n";
      out << "reduced " << reduced.size() << "\n";
    };
  });

  // gen
  GenSpec spec;
  std::string gen_out;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random weighted tree");
  gen_cmd->add_option("--n", spec.n, "Node count")->capture_default_str();
  gen_cmd->add_option("--max-children", spec.max_children, "Children per node at most")
      ->capture_default_str();
  gen_cmd->add_option("--height-bias", spec.height_bias,
                      "Probability of attaching below the newest node, in (0, 1]")
      ->capture_default_str();
  gen_cmd->add_option("--important", spec.important_count, "Nodes with positive weight")
      ->capture_default_str();
  gen_cmd->add_option("--weight-low", spec.weight_low, "Smallest weight")->capture_default_str();
  gen_cmd->add_option("--weight-high", spec.weight_high, "Largest weight")->capture_default_str();
  gen_cmd->add_option("--seed", spec.seed, "SplitMix64 seed")->capture_default_str();
  gen_cmd->add_option("--out", gen_out, "Output tree path")->required();
  gen_cmd->callback([&] {
    action = [&] {
      const auto tree = gen_random_tree(spec);
      write_tree_tsv(tree, fs::path(gen_out));
      out << "n " << tree.size() << "\n";
      out << "important " << tree.important().size() << "\n";
      out << "height " << tree.height() << "\n";
    };
  });

  // bench
  std::vector<std::string> bench_inputs;
  std::string bench_algos = "gts,ots", bench_ks = "5", bench_out;
  int bench_repeat = 1;
  double bench_timeout = 0.0;
  bool bench_no_reduce = false;
  auto* bench_cmd = app.add_subcommand("bench", "Time algorithms over many trees");
  bench_cmd->add_option("--inputs", bench_inputs, "Glob pattern(s) of tree files")->required();
  bench_cmd->add_option("--algos", bench_algos, "Comma-separated algorithms")
      ->capture_default_str();
  bench_cmd->add_option("--ks", bench_ks, "Comma-separated k values")->capture_default_str();
  bench_cmd->add_option("--repeat", bench_repeat, "Runs per cell")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench_cmd->add_option("--timeout", bench_timeout,
                        "Seconds; slower runs are recorded as inf (0 = no limit)")
      ->check(CLI::NonNegativeNumber);
  bench_cmd->add_flag("--no-reduce", bench_no_reduce, "Never reduce, even for gts and ots");
  bench_cmd->add_option("--out", bench_out, "CSV output path")->required();
  bench_cmd->callback([&] {
    action = [&] {
      const auto algos = split_list(bench_algos);
      for (const auto& a : algos) {
        if (std::find(kAlgorithms.begin(), kAlgorithms.end(), a) == kAlgorithms.end()) {
          throw Error(ErrorCode::kInvalidSpec, "unknown algorithm '" + a + "'");
        }
      }
      std::vector<int> ks;
      for (const auto& s : split_list(bench_ks)) {
        try {
          ks.push_back(std::stoi(s));
        } catch (const std::exception&) {
          throw Error(ErrorCode::kInvalidSpec, "bad k value '" + s + "'");
        }
      }
      const auto files = expand_globs(bench_inputs);
      if (files.empty()) throw Error(ErrorCode::kIoError, "--inputs matched no files");

      std::ostringstream csv;
      csv << "dataset,algo,k,reduced,score,time_ms,repeat\n";
      for (const auto& file : files) {
        const auto tree = load_tree(file);
        const auto dataset = fs::path(file).filename().string();
        std::optional<ReducedTree> reduced;
        for (const auto& algo : algos) {
          for (int k : ks) {
            if (k < 1 || static_cast<std::size_t>(k) > tree.size()) {
              err << "skip " << dataset << " " << algo << " k=" << k << ": k outside [1, n]\n";
              continue;
            }
            bool reduce = !bench_no_reduce && uses_reduction_by_default(algo);
            if (reduce) {
              if (!reduced) reduced = vtree(tree);
              if (static_cast<std::size_t>(k) > reduced->size()) reduce = false;
            }
            const bool capped = algo == "brute" &&
                                binomial(tree.size(), static_cast<std::uint64_t>(k)) >
                                    kDefaultEnumerationCap;
            for (int rep = 0; rep < bench_repeat; ++rep) {
              csv << dataset << ',' << algo << ',' << k << ',' << (reduce ? "true" : "false")
                  << ',';
              if (capped) {
                csv << ",inf," << rep << "\n";
                continue;
              }
              const auto start = Clock::now();
              SummaryResult result;
              if (reduce) {
                result = lift_result(tree, *reduced, run_algorithm(reduced->tree, algo, k, 0.4));
              } else {
                result = run_algorithm(tree, algo, k, 0.4);
              }
              const double ms = ms_since(start);
              csv << format_weight(result.score) << ',';
              if (bench_timeout > 0 && ms > bench_timeout * 1000.0) {
                csv << "inf";
              } else {
                csv << ms;
              }
              csv << ',' << rep << "\n";
            }
          }
        }
      }
      write_file(bench_out, csv.str());
      out << "wrote " << bench_out << "\n";
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (action) action();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitOk;
}

}  // namespace treesum::cli
