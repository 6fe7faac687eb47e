#include <gtest/gtest.h>

#include <set>

#include "oracle.hpp"
#include "ppart/enumerate.hpp"
#include "ppart/serialize.hpp"

using namespace ppart;

TEST(Enumerate, TriangulationCountsAreCatalan) {
  for (int n = 2; n <= 11; ++n) {
    EXPECT_EQ(BigCount(count_items(enumerate_k_partitions(n, 3))), catalan_k(n - 2, 2)) << n;
  }
}

TEST(Enumerate, KPartitionCountsMatchOracle) {
  for (int k = 3; k <= 6; ++k) {
    for (int n = 2; n <= 11; ++n) {
      const auto got = count_items(enumerate_k_partitions(n, k));
      EXPECT_EQ(static_cast<long>(got), n == 2 ? 1 : oracle::count_kd(n, k, 2)) << n << "," << k;
      EXPECT_EQ(BigCount(got), k_partition_total(n, k));
    }
  }
}

TEST(Enumerate, OrderIsStrictlyIncreasingAndSerializationsUnique) {
  for (int k = 3; k <= 5; ++k) {
    for (int n = 3; n <= 12; ++n) {
      std::vector<std::vector<int>> prev;
      std::set<std::string> seen;
      bool first = true;
      for (auto&& p : enumerate_k_partitions(n, k)) {
        ASSERT_TRUE(is_k_partition(p, k));
        const auto key = decomposition_key(p);
        if (!first) {
          ASSERT_LT(prev, key);
        }
        first = false;
        prev = key;
        ASSERT_TRUE(seen.insert(serialize(p)).second);
      }
    }
  }
}

TEST(Enumerate, PentagonTriangulationsInOrder) {
  const auto all = collect(enumerate_k_partitions(5, 3));
  ASSERT_EQ(all.size(), 5u);
  EXPECT_EQ(all.front(), Partition(5, {{1, 4}, {2, 4}}));
  EXPECT_EQ(all.back(), Partition(5, {{0, 2}, {0, 3}}));
}

TEST(Enumerate, HexagonQuadrangulations) {
  const auto all = collect(enumerate_k_partitions(6, 4));
  std::set<Partition> got(all.begin(), all.end());
  EXPECT_EQ(got, (std::set<Partition>{Partition(6, {{0, 3}}), Partition(6, {{1, 4}}),
                                      Partition(6, {{2, 5}})}));
}

TEST(Enumerate, ProperFilter) {
  const auto poly = make_coloring(scheme::Cyclic{2}, 5);
  const auto proper = collect(enumerate_proper(poly, 3));
  EXPECT_EQ(proper.size(), 4u);
  for (const auto& p : proper) EXPECT_TRUE(is_proper(p, poly, 3));
  EXPECT_EQ(count_proper_brute(make_coloring(scheme::Cyclic{4}, 12), 4), 3);
}

TEST(Enumerate, KdPartitions) {
  const auto all = collect(enumerate_kd_partitions(7, 4, 3));
  EXPECT_EQ(all.size(), 7u);
  for (const auto& p : all) EXPECT_TRUE(is_kd_partition(p, 4, 3));
  EXPECT_EQ(count_items(enumerate_kd_partitions(9, 4, 3)), 30u);
  EXPECT_EQ(count_items(enumerate_kd_partitions(8, 4, 3)), 0u);
  EXPECT_EQ(count_items(enumerate_kd_partitions(3, 4, 3)), 1u);
  EXPECT_EQ(count_items(enumerate_kd_partitions(6, 4, 2)), 3u);
}

TEST(Enumerate, EdgeCases) {
  EXPECT_EQ(collect(enumerate_k_partitions(2, 3)), std::vector<Partition>{Partition(2)});
  EXPECT_EQ(count_items(enumerate_k_partitions(7, 4)), 0u);
  EXPECT_THROW(enumerate_k_partitions(5, 2), ParameterError);
  EXPECT_THROW(enumerate_k_partitions(1, 3), ParameterError);
}

TEST(Enumerate, GuardRefusesBeforeProducing) {
  EXPECT_THROW(enumerate_k_partitions(20, 3, EnumerationLimits{1000}), ResourceError);
  EXPECT_THROW(enumerate_kary_trees(2, 15, EnumerationLimits{1000}), ResourceError);
  EXPECT_THROW(enumerate_kd_partitions(21, 4, 3, EnumerationLimits{10}), ResourceError);
  EXPECT_NO_THROW(enumerate_k_partitions(8, 3, EnumerationLimits{132}));
}

TEST(Enumerate, TreesAreCatalanAndDistinct) {
  for (int k = 2; k <= 4; ++k) {
    for (int n = 0; n <= 6; ++n) {
      const auto trees = collect(enumerate_kary_trees(k, n));
      EXPECT_EQ(BigCount(trees.size()), catalan_k(n, k));
      std::set<KAryTree> uniq(trees.begin(), trees.end());
      EXPECT_EQ(uniq.size(), trees.size());
      for (const auto& t : trees) {
        EXPECT_EQ(t.internal_count(), n);
        EXPECT_EQ(t.leaf_count(), (k - 1) * n + 1);
      }
    }
  }
  EXPECT_EQ(count_items(enumerate_kary_trees(3, 4)), 55u);
}
