#include <gtest/gtest.h>

#include "hyperex/rational.hpp"

using namespace hyperex;

TEST(Ratio, ReducesAndNormalizesSign) {
  Ratio r(6, -8);
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 4);
  EXPECT_EQ(r.str(), "-3/4");
  EXPECT_EQ(Ratio(4, 2).str(), "2");
}

TEST(Ratio, ComparesExactlyNearOverflow) {
  const std::int64_t big = (std::int64_t{1} << 62) - 1;
  EXPECT_LT(Ratio(big - 1, big), Ratio(big, big + 1));
  EXPECT_EQ(Ratio(1, 3), Ratio(2, 6));
  EXPECT_EQ(min(Ratio(1, 2), Ratio(1, 3)), Ratio(1, 3));
  EXPECT_EQ(max(Ratio(1, 2), Ratio(1, 3)), Ratio(1, 2));
}

TEST(Ratio, ZeroDenominatorThrows) { EXPECT_ANY_THROW(Ratio(1, 0)); }

TEST(Ratio, Parse) {
  EXPECT_EQ(parse_ratio("3/6"), Ratio(1, 2));
  EXPECT_EQ(parse_ratio("7"), Ratio(7));
  EXPECT_EQ(parse_ratio("0.49"), Ratio(49, 100));
  EXPECT_EQ(parse_ratio("-1.5"), Ratio(-3, 2));
  EXPECT_ANY_THROW(parse_ratio("x"));
  EXPECT_ANY_THROW(parse_ratio("1/"));
  EXPECT_ANY_THROW(parse_ratio(""));
}

TEST(HalfInteger, Arithmetic) {
  const auto h = HalfInteger::from_halves(5);
  EXPECT_EQ(h.str(), "5/2");
  EXPECT_EQ(h.floor_times(12), 30);
  EXPECT_EQ(HalfInteger::from_halves(1).floor_times(35), 17);
  EXPECT_EQ(HalfInteger::from_halves(1).ceil_times(35), 18);
  EXPECT_EQ(HalfInteger::from_int(2).str(), "2");
  EXPECT_EQ(h.to_ratio(), Ratio(5, 2));
  EXPECT_LT(HalfInteger::from_halves(1), HalfInteger::from_int(1));
}

TEST(HalfInteger, Parse) {
  EXPECT_EQ(parse_half_integer("1/2"), HalfInteger::from_halves(1));
  EXPECT_EQ(parse_half_integer("1.5"), HalfInteger::from_halves(3));
  EXPECT_EQ(parse_half_integer("3"), HalfInteger::from_int(3));
  EXPECT_ANY_THROW(parse_half_integer("1/3"));
}
