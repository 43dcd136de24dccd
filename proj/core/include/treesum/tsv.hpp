#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "treesum/tree.hpp"

namespace treesum {

// Tree file format, one node per line:
//
//   id <TAB> parentId <TAB> weight [<TAB> label] <LF>
//
// The root's parentId is the literal "-". Lines starting with '#' and empty
// lines are skipped. Parsed records go through WeightedTree::build, so all of
// its validation errors apply; a line with the wrong column count or an
// unparsable weight raises MalformedLine with its 1-based line number.
std::vector<NodeRecord> read_tree_records(std::istream& in);
WeightedTree read_tree_tsv(std::istream& in);
WeightedTree parse_tree_tsv(const std::filesystem::path& path);

// Writes nodes in index order, so reading the file back reproduces node
// indices, child order, and preorder. Weights use the shortest decimal form
// that round-trips.
void write_tree_tsv(const WeightedTree& tree, std::ostream& out);
void write_tree_tsv(const WeightedTree& tree, const std::filesystem::path& path);

// Level sidecar for reduced trees: "id <TAB> level" per node.
void write_levels_tsv(const WeightedTree& tree, const std::filesystem::path& path);
// Reads a tree file plus its level sidecar.
WeightedTree parse_tree_with_levels(const std::filesystem::path& tree_path,
                                    const std::filesystem::path& levels_path);

// Shortest round-trip decimal rendering used by every writer.
std::string format_weight(double w);

}  // namespace treesum
