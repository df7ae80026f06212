#include <gtest/gtest.h>

#include <vector>

#include "boolcum/interval_partition.hpp"
#include "boolcum/matrix.hpp"
#include "boolcum/random.hpp"

using namespace boolcum;

namespace {

// Independent enumeration: bit i of a mask in [0, 2^(n-1)) marks a cut after point i+1.
std::vector<IntervalPartition> by_bitmask(std::size_t n) {
  std::vector<IntervalPartition> out;
  for (unsigned long mask = 0; mask < (1UL << (n - 1)); ++mask) {
    std::vector<std::size_t> sizes;
    std::size_t run = 1;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (mask >> i & 1UL) {
        sizes.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    sizes.push_back(run);
    out.emplace_back(sizes);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(IntervalPartition, SmallEnumerations) {
  EXPECT_EQ(enumerate_interval_partitions(1), std::vector<IntervalPartition>{IntervalPartition({1})});
  const std::vector<IntervalPartition> three{IntervalPartition({1, 1, 1}), IntervalPartition({1, 2}),
                                             IntervalPartition({2, 1}), IntervalPartition({3})};
  EXPECT_EQ(enumerate_interval_partitions(3), three);
}

TEST(IntervalPartition, MatchesBitmaskOracle) {
  for (std::size_t n = 1; n <= 12; ++n) {
    const auto all = enumerate_interval_partitions(n);
    EXPECT_EQ(all.size(), 1UL << (n - 1)) << "n=" << n;
    EXPECT_EQ(all, by_bitmask(n)) << "n=" << n;
    for (const auto& g : all) EXPECT_EQ(g.ground_size(), n);
  }
}

TEST(IntervalPartition, RejectsInvalid) {
  EXPECT_THROW(enumerate_interval_partitions(0), Error);
  EXPECT_THROW(IntervalPartition({}), Error);
  EXPECT_THROW(IntervalPartition({2, 0, 1}), Error);
}

TEST(IntervalPartition, Juxtapose) {
  EXPECT_EQ(juxtapose(IntervalPartition({2}), IntervalPartition({1, 1})), IntervalPartition({2, 1, 1}));
  EXPECT_EQ(juxtapose(IntervalPartition({1}), IntervalPartition({3})).str(), "[1,3]");
}

TEST(IntervalPartition, UniqueSplitAtBlockBoundaries) {
  // Every gamma in I(n) with a cut after k is exactly one juxtaposition of I(k) x I(n-k).
  for (std::size_t n = 2; n <= 8; ++n) {
    for (std::size_t k = 1; k < n; ++k) {
      std::vector<IntervalPartition> joined;
      for (const auto& a : enumerate_interval_partitions(k))
        for (const auto& b : enumerate_interval_partitions(n - k)) joined.push_back(juxtapose(a, b));
      std::sort(joined.begin(), joined.end());
      EXPECT_EQ(std::adjacent_find(joined.begin(), joined.end()), joined.end());
      std::vector<IntervalPartition> with_cut;
      for (const auto& g : enumerate_interval_partitions(n)) {
        std::size_t pos = 0;
        for (std::size_t s : g.block_sizes()) {
          pos += s;
          if (pos == k) with_cut.push_back(g);
        }
      }
      EXPECT_EQ(joined, with_cut) << "n=" << n << " k=" << k;
    }
  }
}

TEST(IntervalPartition, ApplyPiGroupsProducts) {
  const MatrixB e12 = MatrixB::unit(2, 0, 1), e21 = MatrixB::unit(2, 1, 0);
  const MatrixB a(2, {1, 2, 3, 4});
  const auto out = apply_pi(IntervalPartition({2, 1}), std::vector<MatrixB>{e12, e21, a});
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0], MatrixB::unit(2, 0, 0));
  EXPECT_EQ(out[1], a);
}

TEST(IntervalPartition, ApplyPiLengthMismatchThrows) {
  EXPECT_THROW(apply_pi(IntervalPartition({2}), std::vector<MatrixB>{MatrixB::identity(2)}), OutOfRange);
}

TEST(IntervalPartition, ApplyPiRespectsJuxtapositionAndOrder) {
  Rng rng(31);
  for (std::size_t n = 2; n <= 6; ++n) {
    for (std::size_t k = 1; k < n; ++k) {
      std::vector<MatrixB> args;
      for (std::size_t i = 0; i < n; ++i) args.push_back(random_matrix(rng, 2));
      for (const auto& g1 : enumerate_interval_partitions(k)) {
        for (const auto& g2 : enumerate_interval_partitions(n - k)) {
          const auto whole = apply_pi(juxtapose(g1, g2), args);
          auto left = apply_pi(g1, std::vector<MatrixB>(args.begin(), args.begin() + k));
          const auto right = apply_pi(g2, std::vector<MatrixB>(args.begin() + k, args.end()));
          left.insert(left.end(), right.begin(), right.end());
          EXPECT_EQ(whole, left);
        }
      }
      // Product of all blocks equals the ordered product of all arguments.
      MatrixB full = args[0];
      for (std::size_t i = 1; i < n; ++i) full = full * args[i];
      for (const auto& g : enumerate_interval_partitions(n)) {
        const auto blocks = apply_pi(g, args);
        MatrixB prod = blocks[0];
        for (std::size_t i = 1; i < blocks.size(); ++i) prod = prod * blocks[i];
        EXPECT_EQ(prod, full);
      }
    }
  }
}
