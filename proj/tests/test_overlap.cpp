#include <gtest/gtest.h>

#include "hyperex/generators.hpp"
#include "hyperex/overlap.hpp"

using namespace hyperex;

namespace {

const HalfInteger kHalf = HalfInteger::from_halves(1);

OverlapOptions forced(std::int32_t d) {
  OverlapOptions o;
  o.delta = kHalf;
  o.max_degree = d;
  o.force = true;
  return o;
}

}  // namespace

TEST(LimitedOverlap, Cases) {
  EXPECT_TRUE(verify_limited_overlap(NodeSet{1, 2}, NodeSet{3, 4}, 100, 5));
  EXPECT_FALSE(verify_limited_overlap(NodeSet{1, 2}, NodeSet{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12}, 100, 5));
  // floor(40 / 8) = 5 private nodes on each side, exactly at the threshold.
  EXPECT_TRUE(verify_limited_overlap(NodeSet{0, 1, 2, 3, 4, 5}, NodeSet{5, 6, 7, 8, 9, 10}, 40, 4));
  EXPECT_FALSE(verify_limited_overlap(NodeSet{1, 2, 3, 4, 5}, NodeSet{5, 6, 7, 8, 9, 10}, 40, 4));
  EXPECT_THROW(verify_limited_overlap(NodeSet{}, NodeSet{}, 10, 0), std::domain_error);
}

TEST(Overlap, SingleSegment) {
  const Graph g = gen::path(200);
  const auto s = overlap_families(g, 0, 199, 1, Ratio(1, 2), forced(2));
  EXPECT_EQ(s.families.size(), 1u);
  EXPECT_TRUE(overlap_matrix(s).empty());
  EXPECT_EQ(s.anchors, (std::vector<NodeId>{0, 199}));
}

TEST(Overlap, FourSegmentsOnPath) {
  const Graph g = gen::path(200);
  const auto s = overlap_families(g, 0, 199, 4, Ratio(1, 2), forced(2));
  EXPECT_GE(s.families.size(), 1u);
  EXPECT_EQ(s.anchors, (std::vector<NodeId>{0, 49, 98, 147, 199}));
  EXPECT_EQ(s.segment_length, 49);
  for (const auto& f : s.families) EXPECT_EQ(check_witness_family(g, f), "");
  for (const auto& c : overlap_matrix(s)) EXPECT_TRUE(c.ok);
}

TEST(Overlap, CaterpillarEightSegments) {
  const Graph g = gen::caterpillar(65);
  ASSERT_EQ(bfs_distances(g, 0)[64], 64);
  const auto s = overlap_families(g, 0, 64, 8, Ratio(1, 2), forced(3));
  EXPECT_FALSE(s.tau_check.ok());
  EXPECT_GE(s.families.size(), 2u);
  std::int32_t total = 0;
  for (auto c : s.group_sizes) total += c;
  EXPECT_EQ(total, 8);
  for (std::size_t i = 0; i + 1 < s.anchors.size(); ++i) {
    const auto d = bfs_distances(g, s.anchors[i])[s.anchors[i + 1]];
    if (i + 2 < s.anchors.size()) {
      EXPECT_EQ(d, 8);
    }
  }
  for (const auto& f : s.families) {
    EXPECT_EQ(check_witness_family(g, f), "");
    for (const Ratio& h : f.expansions) EXPECT_LE(h, s.family_bound.value);
  }
  const auto m = overlap_matrix(s);
  EXPECT_FALSE(m.empty());
  for (const auto& c : m) EXPECT_TRUE(c.ok);
}

TEST(Overlap, GroupIsLargestWithFixedTieOrder) {
  const Graph g = gen::path(200);
  const auto s = overlap_families(g, 0, 199, 6, Ratio(1, 2), forced(2));
  const int key = s.group.parity * 2 + (s.group.hand == Handedness::Right);
  for (int k = 0; k < 4; ++k) {
    EXPECT_LE(s.group_sizes[k], s.group_sizes[key]);
    if (k < key) {
      EXPECT_LT(s.group_sizes[k], s.group_sizes[key]);
    }
  }
  for (auto i : s.chosen) EXPECT_EQ(i % 2, s.group.parity);
}

TEST(Overlap, Errors) {
  EXPECT_THROW(overlap_families(gen::path(9), 0, 8, 1, Ratio(1, 2), forced(2)), std::domain_error);
  // Without force, a tau that fails validation is refused.
  OverlapOptions strict = forced(2);
  strict.force = false;
  EXPECT_THROW(overlap_families(gen::path(200), 0, 199, 4, Ratio(1, 2), strict), std::domain_error);
  EXPECT_THROW(overlap_families(gen::path(20), 0, 19, 0, Ratio(1, 2), forced(2)), std::domain_error);
}
