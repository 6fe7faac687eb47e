#include <gtest/gtest.h>

#include <map>

#include "oracle.hpp"
#include "ppart/core.hpp"
#include "ppart/enumerate.hpp"
#include "ppart/serialize.hpp"

using namespace ppart;

namespace {

std::vector<std::vector<int>> region_lists(const Partition& p) {
  std::vector<std::vector<int>> out;
  for (const auto& r : regions(p)) out.push_back(r.vertices);
  return out;
}

}  // namespace

TEST(Coloring, CyclicWrapsAround) {
  const auto poly = make_coloring(scheme::Cyclic{3}, 7);
  EXPECT_EQ(poly.colors(), (std::vector<Color>{1, 2, 3, 1, 2, 3, 1}));
  EXPECT_EQ(poly.num_colors(), 3);
}

TEST(Coloring, AdjustedRecolorsLastVertexOnlyWhenOneModThree) {
  EXPECT_EQ(make_coloring(scheme::CyclicAdjusted3{}, 4).colors(),
            (std::vector<Color>{1, 2, 3, 2}));
  EXPECT_EQ(make_coloring(scheme::CyclicAdjusted3{}, 7).colors(),
            (std::vector<Color>{1, 2, 3, 1, 2, 3, 2}));
  EXPECT_EQ(make_coloring(scheme::CyclicAdjusted3{}, 5).colors(),
            (std::vector<Color>{1, 2, 3, 1, 2}));
  EXPECT_EQ(make_coloring(scheme::CyclicAdjusted3{}, 6).colors(),
            (std::vector<Color>{1, 2, 3, 1, 2, 3}));
}

TEST(Coloring, BlocksAndExplicit) {
  EXPECT_EQ(make_coloring(scheme::Blocks{2, 3}, 5).colors(), (std::vector<Color>{1, 1, 2, 2, 2}));
  EXPECT_THROW(make_coloring(scheme::Blocks{2, 2}, 5), ParameterError);
  EXPECT_THROW(make_coloring(scheme::Blocks{0, 5}, 5), ParameterError);
  const auto poly = make_coloring(scheme::Explicit{{1, 3, 2, 3}}, 4);
  EXPECT_EQ(poly.num_colors(), 3);
  EXPECT_THROW(make_coloring(scheme::Explicit{{1, 2}}, 3), ParameterError);
}

TEST(Coloring, RejectsBadPolygons) {
  EXPECT_THROW(ColoredPolygon({1}, 1), ParameterError);
  EXPECT_THROW(ColoredPolygon({1, 3}, 2), ParameterError);
  EXPECT_THROW(ColoredPolygon({0, 1}, 2), ParameterError);
  EXPECT_THROW(make_coloring(scheme::Cyclic{0}, 4), ParameterError);
}

TEST(PartitionModel, NormalizesChords) {
  const Partition p(6, {{3, 0}, {0, 2}, {0, 3}});
  EXPECT_EQ(p.chords(), (std::vector<Chord>{{0, 2}, {0, 3}}));
  EXPECT_TRUE(p.has_chord(2, 0));
  EXPECT_TRUE(p.has_edge(0, 5));
  EXPECT_TRUE(p.has_edge(3, 4));
  EXPECT_FALSE(p.has_edge(1, 4));
}

TEST(PartitionModel, RejectsInvalidChords) {
  EXPECT_THROW(Partition(6, {{0, 1}}), InvalidPartition);
  EXPECT_THROW(Partition(6, {{0, 5}}), InvalidPartition);
  EXPECT_THROW(Partition(6, {{0, 6}}), InvalidPartition);
  EXPECT_THROW(Partition(6, {{-1, 3}}), InvalidPartition);
  EXPECT_THROW(Partition(6, {{0, 3}, {1, 4}}), InvalidPartition);
  EXPECT_THROW(Partition(1), InvalidPartition);
  EXPECT_NO_THROW(Partition(6, {{0, 3}, {3, 5}}));
}

TEST(Regions, MatchOracleFaceListings) {
  EXPECT_EQ(region_lists(Partition(5, {{0, 2}, {0, 3}})),
            (std::vector<std::vector<int>>{{0, 1, 2}, {0, 2, 3}, {0, 3, 4}}));
  EXPECT_EQ(region_lists(Partition(5, {{0, 2}, {2, 4}})),
            (std::vector<std::vector<int>>{{0, 1, 2}, {0, 2, 4}, {2, 3, 4}}));
  EXPECT_EQ(region_lists(Partition(4)), (std::vector<std::vector<int>>{{0, 1, 2, 3}}));
  EXPECT_EQ(region_lists(Partition(6, {{0, 3}})),
            (std::vector<std::vector<int>>{{0, 1, 2, 3}, {0, 3, 4, 5}}));
  EXPECT_EQ(region_lists(Partition(5, {{1, 4}})),
            (std::vector<std::vector<int>>{{0, 1, 4}, {1, 2, 3, 4}}));
  EXPECT_TRUE(regions(Partition(2)).empty());
}

TEST(Regions, PreorderStartsAtRoot) {
  const Partition p(7, {{1, 3}, {3, 6}, {4, 6}});
  const auto pre = regions_preorder(p);
  ASSERT_FALSE(pre.empty());
  EXPECT_EQ(pre.front(), root_region(p));
  EXPECT_TRUE(pre.front().contains_root_edge(7));
  EXPECT_EQ(pre.front().vertices, (std::vector<int>{0, 1, 3, 6}));
  EXPECT_THROW(root_region(Partition(2)), ContractError);
}

// Every dissection up to 9 vertices: q chords give q+1 regions, regions
// agree with the rotation-system faces, each side lies on exactly one
// region and each chord on exactly two.
TEST(Regions, InvariantsAgainstOracleOnAllDissections) {
  for (int n = 3; n <= 9; ++n) {
    oracle::for_each_dissection(n, [&](const std::vector<oracle::Diag>& ch) {
      const Partition p(n, ch);
      const auto rs = region_lists(p);
      ASSERT_EQ(rs.size(), ch.size() + 1);
      ASSERT_EQ(rs, oracle::faces(n, ch));
      std::map<std::pair<int, int>, int> cover;
      for (const auto& f : rs) {
        for (std::size_t s = 0; s < f.size(); ++s) {
          int a = f[s], b = f[(s + 1) % f.size()];
          cover[{std::min(a, b), std::max(a, b)}]++;
        }
      }
      for (const auto& [e, cnt] : cover) ASSERT_EQ(cnt, p.has_chord(e.first, e.second) ? 2 : 1);
      ASSERT_EQ(cover.size(), static_cast<std::size_t>(n) + ch.size());
    });
  }
}

TEST(Predicates, KPartition) {
  EXPECT_TRUE(is_k_partition(Partition(6, {{0, 3}}), 4));
  EXPECT_FALSE(is_k_partition(Partition(6, {{0, 3}}), 3));
  EXPECT_TRUE(is_k_partition(Partition(2), 5));
  EXPECT_TRUE(is_k_partition(Partition(3), 3));
}

TEST(Predicates, KDPartition) {
  // 7-gon, root triangle {0,3,6} with squares below
  EXPECT_TRUE(is_kd_partition(Partition(7, {{0, 3}, {3, 6}}), 4, 3));
  EXPECT_FALSE(is_kd_partition(Partition(7, {{0, 3}, {3, 6}}), 4, 4));
  EXPECT_TRUE(is_kd_partition(Partition(6, {{0, 3}}), 4, 2));
  EXPECT_TRUE(is_kd_partition(Partition(3), 4, 3));
}

TEST(Predicates, ProperNeedsEveryColorInEveryRegion) {
  const auto poly = make_coloring(scheme::Cyclic{2}, 5);
  EXPECT_TRUE(is_proper(Partition(5, {{0, 2}, {0, 3}}), poly, 3));
  EXPECT_FALSE(is_proper(Partition(5, {{0, 2}, {2, 4}}), poly, 3));
  EXPECT_THROW(is_proper(Partition(5, {{0, 2}}), poly, 3), ContractError);
  EXPECT_THROW(is_proper(Partition(6, {{0, 2}}), poly, 3), ContractError);
  EXPECT_TRUE(is_proper(Partition(2), make_coloring(scheme::Cyclic{2}, 2), 3));
}

TEST(Predicates, AllRegionsFullColoredIgnoresSizes) {
  const auto poly = make_coloring(scheme::Cyclic{2}, 5);
  EXPECT_TRUE(all_regions_full_colored(Partition(5, {{0, 2}}), poly));
  EXPECT_FALSE(all_regions_full_colored(Partition(5, {{0, 2}, {2, 4}}), poly));
}

TEST(Predicates, MonochromaticRegion) {
  const auto poly = make_coloring(scheme::Cyclic{3}, 7);
  // triangle 0,3,6 is monochromatic (colors 1,1,1)
  EXPECT_TRUE(has_monochromatic_region(Partition(7, {{0, 3}, {3, 6}, {0, 2}, {3, 5}}), poly));
  EXPECT_FALSE(has_monochromatic_region(Partition(7, {{0, 2}, {0, 3}, {0, 4}, {0, 5}}), poly));
}

TEST(Predicates, StandardReading) {
  const auto poly = make_coloring(scheme::Cyclic{2}, 5);
  const Partition right(5, {{0, 2}, {2, 4}});
  // the quadrilateral of the flip between the two triangulations below
  const Region q{{0, 2, 3, 4}};
  EXPECT_EQ(standard_reading(q, poly), (std::vector<Color>{1, 1, 2, 1}));
  EXPECT_EQ(standard_reading(root_region(right), poly), (std::vector<Color>{1, 1, 1}));
  EXPECT_EQ(standard_reading(root_region(Partition(4)), make_coloring(scheme::CyclicAdjusted3{}, 4)),
            (std::vector<Color>{1, 2, 3, 2}));
  EXPECT_THROW(standard_reading(Region{{0, 9}}, poly), ContractError);
}

TEST(Serialization, KeyOrderAndRoundTrip) {
  const Partition p(6, {{2, 0}, {0, 3}});
  EXPECT_EQ(serialize(p), R"({"n":6,"chords":[[0,2],[0,3]]})");
  const auto poly = make_coloring(scheme::Cyclic{2}, 6);
  const auto text = serialize(p, poly);
  EXPECT_EQ(text, R"({"n":6,"colors":[1,2,1,2,1,2],"chords":[[0,2],[0,3]]})");
  const auto back = parse_partition(text);
  EXPECT_EQ(back.partition, p);
  ASSERT_TRUE(back.colors.has_value());
  EXPECT_EQ(*back.colors, poly.colors());
  EXPECT_FALSE(parse_partition(serialize(p)).colors.has_value());
}

TEST(Serialization, RejectsMalformed) {
  EXPECT_THROW(parse_partition(R"({"n":5})"), InvalidPartition);
  EXPECT_THROW(parse_partition(R"({"n":5,"chords":[[0,2,3]]})"), InvalidPartition);
  EXPECT_THROW(parse_partition(R"({"n":5,"chords":[[0,2],[1,3]]})"), InvalidPartition);
  EXPECT_THROW(parse_partition(R"({"n":3,"chords":[],"colors":[1,2]})"), InvalidPartition);
}

TEST(Serialization, RoundTripsEveryTriangulationOfTheOctagon) {
  for (auto&& p : enumerate_k_partitions(8, 3)) {
    ASSERT_EQ(parse_partition(serialize(p)).partition, p);
  }
}
