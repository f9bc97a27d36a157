#include <gtest/gtest.h>

#include "comax/rational.hpp"

namespace comax {
namespace {

TEST(Rational, ParsesAndReduces) {
  EXPECT_EQ(Rational::parse("2/4"), Rational(1, 2));
  EXPECT_EQ(Rational::parse("-3/6").str(), "-1/2");
  EXPECT_EQ(Rational::parse("7").str(), "7");
  EXPECT_EQ(Rational(4, 2).str(), "2");
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"", "1/0", "1/-2", "a/b", "1/2/3", "1.5", " /3"}) {
    EXPECT_THROW(Rational::parse(bad), DomainError) << bad;
  }
}

TEST(Rational, ArithmeticIsExact) {
  const Rational third(1, 3);
  EXPECT_EQ(third + third + third, Rational(1));
  EXPECT_EQ(Rational(1, 2) * Rational(1, 2), Rational(1, 4));
  EXPECT_EQ(Rational(1) - Rational(1, 7), Rational(6, 7));
  EXPECT_EQ(Rational(3, 4) / Rational(3, 8), Rational(2));
  EXPECT_THROW(Rational(1) / Rational(0), DomainError);
}

TEST(Rational, FloorAndCeil) {
  EXPECT_EQ(Rational(7, 2).floor(), 3);
  EXPECT_EQ(Rational(7, 2).ceil(), 4);
  EXPECT_EQ(Rational(-7, 2).floor(), -4);
  EXPECT_EQ(Rational(-7, 2).ceil(), -3);
  EXPECT_EQ(Rational(5).floor(), 5);
  EXPECT_EQ(Rational(5).ceil(), 5);
}

TEST(Rational, OrderingAndUnitInterval) {
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_EQ(max(Rational(1, 3), Rational(1, 2)), Rational(1, 2));
  EXPECT_EQ(min(Rational(1, 3), Rational(1, 2)), Rational(1, 3));
  EXPECT_TRUE(Rational(0).in_unit_interval());
  EXPECT_TRUE(Rational(1).in_unit_interval());
  EXPECT_FALSE(Rational(3, 2).in_unit_interval());
  EXPECT_FALSE(Rational(-1, 9).in_unit_interval());
  EXPECT_THROW(require_unit(Rational(3, 2), "vP"), DomainError);
  EXPECT_NO_THROW(require_unit(Rational(1, 2), "vP"));
}

}  // namespace
}  // namespace comax
