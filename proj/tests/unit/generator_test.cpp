#include <gtest/gtest.h>

#include "treesum/error.hpp"
#include "treesum/generator.hpp"

namespace treesum {
namespace {

TEST(GeneratorTest, SplitMix64ReferenceValues) {
  // First outputs for seed 0 of the reference SplitMix64.
  SplitMix64 rng(0);
  EXPECT_EQ(rng.next(), 0xE220A8397B1DCDAFULL);
  EXPECT_EQ(rng.next(), 0x6E789E6AA1B965F4ULL);
  EXPECT_EQ(rng.next(), 0x06C45D188009454FULL);
}

TEST(GeneratorTest, BelowAndUnitRanges) {
  SplitMix64 rng(3);
  for (int i = 0; i < 10000; ++i) {
    ASSERT_LT(rng.below(7), 7u);
    const double u = rng.unit();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}

TEST(GeneratorTest, Deterministic) {
  GenSpec spec;
  spec.n = 300;
  spec.important_count = 40;
  spec.seed = 99;
  const auto a = gen_random_tree(spec);
  const auto b = gen_random_tree(spec);
  ASSERT_EQ(a.size(), b.size());
  for (NodeId v = 0; v < a.size(); ++v) {
    ASSERT_EQ(a.parent(v), b.parent(v));
    ASSERT_EQ(a.weight(v), b.weight(v));
  }
  spec.seed = 100;
  const auto c = gen_random_tree(spec);
  bool differs = false;
  for (NodeId v = 0; v < a.size(); ++v) differs = differs || a.parent(v) != c.parent(v);
  EXPECT_TRUE(differs);
}

TEST(GeneratorTest, RespectsSpec) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    GenSpec spec;
    spec.n = 50 + seed * 7;
    spec.important_count = seed;
    spec.max_children = 1 + static_cast<int>(seed % 4);
    spec.height_bias = (1 + seed % 4) / 4.0;
    spec.weight_low = 2;
    spec.weight_high = 9;
    spec.seed = seed;
    const auto tree = gen_random_tree(spec);
    ASSERT_EQ(tree.size(), spec.n);
    ASSERT_EQ(tree.important().size(), spec.important_count);
    for (NodeId v = 0; v < tree.size(); ++v) {
      ASSERT_EQ(tree.id(v), "v" + std::to_string(v));
      ASSERT_LE(tree.children(v).size(), static_cast<std::size_t>(spec.max_children));
      if (v > 0) ASSERT_LT(tree.parent(v), v);
      const double w = tree.weight(v);
      if (w > 0) {
        ASSERT_GE(w, 2);
        ASSERT_LE(w, 9);
        ASSERT_EQ(w, static_cast<int>(w));
      }
    }
  }
}

TEST(GeneratorTest, HeightBiasDeepens) {
  GenSpec spec;
  spec.n = 500;
  spec.important_count = 10;
  spec.height_bias = 1.0;
  EXPECT_EQ(gen_random_tree(spec).height(), 499);
  spec.height_bias = 0.01;
  EXPECT_LT(gen_random_tree(spec).height(), 100);
}

TEST(GeneratorTest, InvalidSpecs) {
  GenSpec spec;
  spec.n = 0;
  EXPECT_THROW(gen_random_tree(spec), Error);
  spec = {};
  spec.important_count = 21;
  EXPECT_THROW(gen_random_tree(spec), Error);
  spec = {};
  spec.max_children = 0;
  EXPECT_THROW(gen_random_tree(spec), Error);
  spec = {};
  spec.height_bias = 0.0;
  EXPECT_THROW(gen_random_tree(spec), Error);
  spec.height_bias = 1.5;
  EXPECT_THROW(gen_random_tree(spec), Error);
  spec = {};
  spec.weight_low = 0;
  EXPECT_THROW(gen_random_tree(spec), Error);
  spec = {};
  spec.weight_low = 5;
  spec.weight_high = 4;
  EXPECT_THROW(gen_random_tree(spec), Error);
}

}  // namespace
}  // namespace treesum
