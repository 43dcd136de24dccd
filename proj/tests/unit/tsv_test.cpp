#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "test_support.hpp"
#include "treesum/error.hpp"
#include "treesum/tsv.hpp"
#include "treesum/vtree.hpp"

namespace treesum {
namespace {

ErrorCode code_of(const std::string& text) {
  std::istringstream in(text);
  try {
    read_tree_tsv(in);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for:\n" << text;
  return ErrorCode::kIoError;
}

TEST(TsvTest, ParsesFixture) {
  const auto tree = testing::load_fixture("disease.tsv");
  EXPECT_EQ(tree.size(), 13u);
  EXPECT_EQ(tree.id(tree.root()), "r");
  EXPECT_DOUBLE_EQ(tree.total_weight(), 200);
}

TEST(TsvTest, CommentsLabelsAndBlankLines) {
  std::istringstream in("# header\n\nr\t-\t1.5\troot node\nx\tr\t+2\n\n");
  const auto tree = read_tree_tsv(in);
  ASSERT_EQ(tree.size(), 2u);
  EXPECT_EQ(tree.label(0), "root node");
  EXPECT_EQ(tree.label(1), "");
  EXPECT_DOUBLE_EQ(tree.weight(1), 2);
}

TEST(TsvTest, Errors) {
  EXPECT_EQ(code_of("r\t-\t1\ns\t-\t1\n"), ErrorCode::kMultipleRoots);
  EXPECT_EQ(code_of("r\t-\t-1\n"), ErrorCode::kNegativeWeight);
  EXPECT_EQ(code_of("r\t-\t1\na\tr\n"), ErrorCode::kMalformedLine);
  EXPECT_EQ(code_of("r\t-\tabc\n"), ErrorCode::kMalformedLine);
  EXPECT_EQ(code_of("r\t-\t1x\n"), ErrorCode::kMalformedLine);
  EXPECT_EQ(code_of("r\t-\tnan\n"), ErrorCode::kMalformedLine);
  EXPECT_EQ(code_of("r\t-\t1\na\tq\t1\n"), ErrorCode::kOrphanParentReference);
  EXPECT_EQ(code_of("r\t-\t1\nr\tr\t1\n"), ErrorCode::kDuplicateId);
  EXPECT_EQ(code_of("r\t-\t1\na\tb\t1\nb\ta\t1\n"), ErrorCode::kCycleDetected);
  EXPECT_EQ(code_of("# only a comment\n"), ErrorCode::kNoRoot);
  EXPECT_THROW(parse_tree_tsv("/nonexistent/tree.tsv"), Error);
}

TEST(TsvTest, MalformedLineReportsLineNumber) {
  std::istringstream in("r\t-\t1\n\na\tr\n");
  try {
    read_tree_tsv(in);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(TsvTest, RoundTrip) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto spec = testing::small_spec(seed, 80, 30);
    const auto tree = gen_random_tree(spec);
    std::ostringstream out;
    write_tree_tsv(tree, out);
    std::istringstream in(out.str());
    const auto back = read_tree_tsv(in);
    ASSERT_EQ(back.size(), tree.size());
    for (NodeId v = 0; v < tree.size(); ++v) {
      ASSERT_EQ(back.id(v), tree.id(v));
      ASSERT_EQ(back.parent(v), tree.parent(v));
      ASSERT_EQ(back.weight(v), tree.weight(v));
    }
    ASSERT_TRUE(std::equal(back.preorder().begin(), back.preorder().end(), tree.preorder().begin()));
  }
}

TEST(TsvTest, FormatWeight) {
  EXPECT_EQ(format_weight(10), "10");
  EXPECT_EQ(format_weight(0.1), "0.1");
  EXPECT_EQ(std::stod(format_weight(1.0 / 3.0)), 1.0 / 3.0);
}

TEST(TsvTest, ReducedTreeWithLevels) {
  const auto tree = testing::load_fixture("sparse.tsv");
  const auto reduced = vtree(tree);
  const auto dir = std::filesystem::temp_directory_path() / "treesum_tsv_test";
  std::filesystem::create_directories(dir);
  write_tree_tsv(reduced.tree, dir / "r.tsv");
  write_levels_tsv(reduced.tree, dir / "r.tsv.levels");
  const auto back = parse_tree_with_levels(dir / "r.tsv", dir / "r.tsv.levels");
  ASSERT_EQ(back.size(), reduced.size());
  for (NodeId v = 0; v < back.size(); ++v) {
    EXPECT_EQ(back.level(v), reduced.tree.level(v));
  }
  EXPECT_EQ(back.level(back.at("v7")), 3);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace treesum
