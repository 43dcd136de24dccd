#include "treesum/tsv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <unordered_map>

#include "treesum/error.hpp"

namespace treesum {

namespace {

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab == std::string_view::npos ? tab : tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return fields;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open '" + path.string() + "' for reading");
  return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot open '" + path.string() + "' for writing");
  return out;
}

Error malformed(std::size_t line_no, const std::string& what) {
  return Error(ErrorCode::kMalformedLine, "line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

std::vector<NodeRecord> read_tree_records(std::istream& in) {
  std::vector<NodeRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const auto fields = split_tabs(line);
    if (fields.size() < 3 || fields.size() > 4) {
      throw malformed(line_no, "expected 3 or 4 tab-separated columns, got " +
                                   std::to_string(fields.size()));
    }
    NodeRecord rec;
    rec.id = std::string(fields[0]);
    if (rec.id.empty()) throw malformed(line_no, "empty id");
    if (fields[1].empty()) throw malformed(line_no, "empty parent id");
    if (fields[1] != "-") rec.parent = std::string(fields[1]);

    const auto text = fields[2];
    const char* first = text.data();
    const char* last = text.data() + text.size();
    // from_chars rejects a leading '+', accept it for hand-written files
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, rec.weight);
    if (ec != std::errc() || ptr != last || text.empty() || !std::isfinite(rec.weight)) {
      throw malformed(line_no, "bad weight '" + std::string(text) + "'");
    }
    if (fields.size() == 4) rec.label = std::string(fields[3]);
    records.push_back(std::move(rec));
  }
  if (in.bad()) throw Error(ErrorCode::kIoError, "read failure");
  return records;
}

WeightedTree read_tree_tsv(std::istream& in) {
  const auto records = read_tree_records(in);
  return WeightedTree::build(records);
}

WeightedTree parse_tree_tsv(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_tree_tsv(in);
}

std::string format_weight(double w) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), w);
  return std::string(buf, ptr);
}

void write_tree_tsv(const WeightedTree& tree, std::ostream& out) {
  for (NodeId v = 0; v < tree.size(); ++v) {
    const NodeId p = tree.parent(v);
    out << tree.id(v) << '\t' << (p == kNoNode ? std::string("-") : tree.id(p)) << '\t'
        << format_weight(tree.weight(v));
    if (!tree.label(v).empty()) out << '\t' << tree.label(v);
    out << '\n';
  }
}

void write_tree_tsv(const WeightedTree& tree, const std::filesystem::path& path) {
  auto out = open_out(path);
  write_tree_tsv(tree, out);
  if (!out) throw Error(ErrorCode::kIoError, "write to '" + path.string() + "' failed");
}

void write_levels_tsv(const WeightedTree& tree, const std::filesystem::path& path) {
  auto out = open_out(path);
  for (NodeId v = 0; v < tree.size(); ++v) out << tree.id(v) << '\t' << tree.level(v) << '\n';
  if (!out) throw Error(ErrorCode::kIoError, "write to '" + path.string() + "' failed");
}

WeightedTree parse_tree_with_levels(const std::filesystem::path& tree_path,
                                    const std::filesystem::path& levels_path) {
  auto tree_in = open_in(tree_path);
  const auto records = read_tree_records(tree_in);

  std::unordered_map<std::string, int> by_id;
  auto in = open_in(levels_path);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const auto fields = split_tabs(line);
    int level = 0;
    if (fields.size() != 2) throw malformed(line_no, "expected id and level");
    auto [ptr, ec] = std::from_chars(fields[1].data(), fields[1].data() + fields[1].size(), level);
    if (ec != std::errc() || ptr != fields[1].data() + fields[1].size() || level < 0) {
      throw malformed(line_no, "bad level '" + std::string(fields[1]) + "'");
    }
    by_id[std::string(fields[0])] = level;
  }

  std::vector<int> levels;
  levels.reserve(records.size());
  for (const auto& rec : records) {
    auto it = by_id.find(rec.id);
    if (it == by_id.end()) {
      throw Error(ErrorCode::kUnknownNode, "no level recorded for '" + rec.id + "'");
    }
    levels.push_back(it->second);
  }
  return WeightedTree::build_with_levels(records, levels);
}

}  // namespace treesum
