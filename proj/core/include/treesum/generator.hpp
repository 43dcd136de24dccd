#pragma once

#include <cstdint>

#include "treesum/tree.hpp"

namespace treesum {

/// SplitMix64. Fixed so that generated fixtures are identical across
/// platforms and ports:
///
///   state += 0x9E3779B97F4A7C15
///   z = state
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   return z ^ (z >> 31)
///
/// below(m) is the high 64 bits of next() * m (128-bit product) and
/// unit() is (next() >> 11) * 2^-53.
class SplitMix64 {
  __extension__ using Wide = unsigned __int128;

 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, m); m > 0.
  std::uint64_t below(std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<Wide>(next()) * m) >> 64);
  }

  /// Uniform in [0, 1).
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

struct GenSpec {
  std::size_t n = 20;
  // Upper bound on children per node.
  int max_children = 4;
  // Probability that a new node hangs below the previously added node
  // (deepening the tree); otherwise the parent is drawn uniformly among
  // nodes that still have room for a child.
  double height_bias = 0.3;
  std::size_t important_count = 10;
  int weight_low = 1;
  int weight_high = 100;
  std::uint64_t seed = 1;
};

/// Random tree per `spec`. Node i has id "v<i>" and i's parent always has a
/// smaller index. Exactly `important_count` distinct nodes receive integer
/// weights drawn uniformly from [weight_low, weight_high]; all others get 0.
/// Throws InvalidSpec for inconsistent specs.
WeightedTree gen_random_tree(const GenSpec& spec);

}  // namespace treesum
