#include <gtest/gtest.h>

#include "comax/omega.hpp"
#include "support/oracles.hpp"

namespace comax {
namespace {

using P = OmegaPoint;

OmegaFunction fn(Rational vP, std::vector<Rational> prefix, Rational alpha, Rational beta) {
  return OmegaFunction::make(std::move(vP), std::move(prefix), std::move(alpha), std::move(beta));
}

TEST(OmegaPointTest, PositionsAndNames) {
  EXPECT_EQ(P::p().position(), Rational(2));
  EXPECT_EQ(P::index(1).position(), Rational(0));
  EXPECT_EQ(P::index(4).position(), Rational(3, 4));
  EXPECT_EQ(P::limit().position(), Rational(1));
  EXPECT_EQ(P::index(12).str(), "Index(12)");
  EXPECT_EQ(P::parse("Index(12)"), P::index(12));
  EXPECT_EQ(P::parse("P"), P::p());
  EXPECT_EQ(P::parse("Limit"), P::limit());
  EXPECT_THROW(P::index(0), DomainError);
  EXPECT_THROW(P::parse("Index(0)"), DomainError);
  EXPECT_THROW(P::parse("Q"), DomainError);
  EXPECT_LT(P::p(), P::index(1));
  EXPECT_LT(P::index(3), P::index(10));
  EXPECT_LT(P::index(1000), P::limit());
}

TEST(OmegaFunctionTest, Validation) {
  EXPECT_THROW(fn(Rational(3, 2), {}, 0, 0), DomainError);
  EXPECT_THROW(fn(0, {Rational(-1, 2)}, 0, 0), DomainError);
  EXPECT_THROW(fn(0, {}, 0, Rational(3, 2)), DomainError);  // limit above 1
  EXPECT_THROW(fn(0, {}, 2, -1), DomainError);              // a_1 value -1
  EXPECT_NO_THROW(fn(0, {}, 1, 0));
}

TEST(OmegaFunctionTest, CanonicalFormDropsRedundantPrefix) {
  const auto f = fn(Rational(1, 2), {Rational(0), Rational(1, 2), Rational(2, 3)}, 1, 0);
  EXPECT_EQ(f.prefix_length(), 0u);
  EXPECT_EQ(f, fn(Rational(1, 2), {}, 1, 0));
  const auto g = fn(0, {Rational(1, 4), Rational(1, 2)}, 0, Rational(1, 2));
  EXPECT_EQ(g.prefix_length(), 1u);
}

TEST(OmegaFunctionTest, NamedFunctions) {
  EXPECT_EQ(eval(make_f(1), P::index(2)), Rational(1, 2));
  EXPECT_EQ(eval(make_f(0), P::p()), Rational(0));
  EXPECT_EQ(eval(make_f(1), P::p()), Rational(1));
  EXPECT_EQ(eval(make_f(1), P::limit()), Rational(1));
  EXPECT_EQ(eval(make_f(1), P::index(3)), Rational(2, 3));
  for (const auto& x : testing::truncated_points(20)) EXPECT_EQ(eval(make_constant(Rational(1, 3)), x), Rational(1, 3));
  EXPECT_EQ(eval(fn(0, {Rational(0)}, 0, Rational(1, 2)), P::index(5)), Rational(1, 2));
  EXPECT_THROW(make_f(2), DomainError);
  EXPECT_THROW(make_constant(Rational(5, 4)), DomainError);
}

TEST(OmegaFunctionTest, Order) {
  EXPECT_TRUE(leq(make_f(0), make_f(1)));
  EXPECT_FALSE(leq(make_f(1), make_f(0)));
  EXPECT_FALSE(leq(make_constant(Rational(1, 2)), make_f(1)));
  // Differ only far out in the tail: equal limits, different slopes.
  const auto steep = fn(0, {}, Rational(1, 2), Rational(1, 2));
  const auto flat = make_constant(1);
  EXPECT_TRUE(leq(steep, flat));
  EXPECT_FALSE(leq(flat, steep));
}

TEST(OmegaFunctionTest, AttainedMax) {
  const auto m1 = attained_max(make_f(1));
  EXPECT_EQ(m1.value, Rational(1));
  EXPECT_EQ(m1.site, P::p());
  const auto m0 = attained_max(make_f(0));
  EXPECT_EQ(m0.value, Rational(1));
  EXPECT_EQ(m0.site, P::limit());
  const auto c = attained_max(make_constant(Rational(1, 3)));
  EXPECT_EQ(c.value, Rational(1, 3));
  EXPECT_EQ(c.site, P::p());
  // Tail -a_n + 3/2 peaks right after the prefix, at a_3.
  const auto d = attained_max(fn(0, {Rational(1, 4), Rational(3, 4)}, -1, Rational(3, 2)));
  EXPECT_EQ(d.value, Rational(5, 6));
  EXPECT_EQ(d.site, P::index(3));
}

TEST(OmegaFunctionTest, JoinExamples) {
  EXPECT_EQ(join(make_f(0), make_f(1)), make_f(1));
  EXPECT_EQ(meet(make_f(0), make_f(1)), make_f(0));
  EXPECT_EQ(join(make_f(1), make_f(1)), make_f(1));

  const auto a = fn(0, {}, 1, 0);
  const auto b = fn(0, {}, 0, Rational(1, 2));
  const auto j = join(a, b);
  EXPECT_EQ(j.alpha(), Rational(1));
  EXPECT_EQ(j.beta(), Rational(0));
  // max(a_n, 1/2) meets the tail a_n already at a_2, so only a_1 stays explicit.
  EXPECT_EQ(j.prefix_length(), 1u);
  EXPECT_EQ(j.prefix()[0], Rational(1, 2));
  for (std::uint64_t n = 1; n <= 40; ++n) {
    EXPECT_EQ(eval(j, P::index(n)), max(index_position(n), Rational(1, 2))) << n;
  }
}

TEST(OmegaFunctionTest, ComonotoneExamples) {
  const auto r = comonotone_omega(make_f(0), make_f(1));
  ASSERT_FALSE(r.comonotone);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->first, P::p());
  EXPECT_EQ(r.witness->second, P::index(2));
  EXPECT_EQ(testing::defining_product(make_f(0), make_f(1), P::p(), P::index(2)), Rational(-1, 4));

  for (const auto& f : {make_f(0), make_f(1), fn(Rational(1, 3), {Rational(1)}, -1, 1)}) {
    for (const Rational& c : {Rational(0), Rational(1, 2), Rational(1)}) {
      EXPECT_TRUE(comonotone_omega(f, make_constant(c)));
      EXPECT_TRUE(comonotone_omega(make_constant(c), f));
    }
    EXPECT_TRUE(comonotone_omega(f, f));
  }
}

TEST(OmegaFunctionTest, F1OutsideF2F3AgainstPeakAtP) {
  // f <= f_1 reaching 1 only at the limit, while f(p) < 1: in F1 only.
  const auto f = fn(Rational(1, 2), {}, 1, 0);
  const auto mf = membership(f);
  ASSERT_TRUE(mf.inF1);
  ASSERT_FALSE(mf.inF2);
  ASSERT_FALSE(mf.inF3);
  const auto g = fn(1, {}, 1, 0);
  ASSERT_TRUE(membership(g).inF1);
  EXPECT_FALSE(comonotone_omega(f, g));
}

TEST(OmegaFunctionTest, ViolationBeyondTruncation) {
  // f decreases toward its limit, g increases; the prefix hides the tails
  // until Index(100).
  std::vector<Rational> flat(99, Rational(1, 2));
  const auto f = fn(Rational(1, 2), flat, -1, Rational(3, 2));
  const auto g = fn(Rational(1, 2), flat, 1, Rational(-1, 2));
  const auto r = comonotone_omega(f, g);
  ASSERT_FALSE(r.comonotone);
  EXPECT_LT(testing::defining_product(f, g, r.witness->first, r.witness->second).sign(), 0);
  EXPECT_FALSE(testing::truncated_violation(f, g, 50).has_value());
}

TEST(OmegaFunctionTest, TailAgainstFixedPointFarOut) {
  // Both tails are the identity; against p the product is negative exactly
  // for positions strictly between f(p) and g(p).
  const auto f = fn(Rational(999, 1000), {}, 1, 0);
  const auto g = fn(Rational(1999, 2000), {}, 1, 0);
  const auto r = comonotone_omega(f, g);
  ASSERT_FALSE(r.comonotone);
  EXPECT_LT(testing::defining_product(f, g, r.witness->first, r.witness->second).sign(), 0);
  EXPECT_FALSE(testing::truncated_violation(f, g, 50).has_value());
  EXPECT_TRUE(testing::truncated_violation(f, g, 1001).has_value());
}

TEST(OmegaFunctionTest, NegativityIntervalBetweenConsecutivePoints) {
  // (a_1000, a_1001) contains no sequence point, so no violation exists.
  const auto f = fn(index_position(1000), {}, 1, 0);
  const auto g = fn(index_position(1001), {}, 1, 0);
  EXPECT_TRUE(comonotone_omega(f, g));
  EXPECT_FALSE(testing::truncated_violation(f, g, 1200).has_value());
  // Widening by one step lets a_1001 in.
  const auto h = fn(index_position(1002), {}, 1, 0);
  const auto r = comonotone_omega(f, h);
  ASSERT_FALSE(r.comonotone);
  EXPECT_LT(testing::defining_product(f, h, r.witness->first, r.witness->second).sign(), 0);
}

TEST(OmegaFunctionTest, MembershipAndNu) {
  const auto m1 = membership(make_f(1));
  EXPECT_TRUE(m1.inF1);
  EXPECT_TRUE(m1.inF2);
  EXPECT_TRUE(m1.inG);
  const auto m0 = membership(make_f(0));
  EXPECT_TRUE(m0.inF1);
  EXPECT_FALSE(m0.inF2);
  EXPECT_FALSE(m0.inF3);
  EXPECT_FALSE(m0.inG);
  EXPECT_FALSE(membership(make_constant(Rational(1, 2))).inF1);

  EXPECT_EQ(nu_eval(make_f(1)), Rational(0));
  EXPECT_EQ(nu_eval(make_f(0)), Rational(1));
  EXPECT_EQ(nu_eval(make_constant(0)), Rational(0));
  for (const Rational& c : {Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1)}) {
    EXPECT_EQ(nu_eval(make_constant(c)), Rational(1));
  }
}

TEST(OmegaFunctionTest, NonMonotonicityWitness) {
  EXPECT_TRUE(leq(make_f(0), make_f(1)));
  EXPECT_GT(nu_eval(make_f(0)), nu_eval(make_f(1)));
}

TEST(OmegaFunctionTest, PrefixThrough) {
  const auto f = fn(0, {Rational(0), Rational(1, 4)}, 1, 0);
  const auto v = f.prefix_through(4);
  ASSERT_EQ(v.size(), 4u);
  EXPECT_EQ(v[1], Rational(1, 4));
  EXPECT_EQ(v[2], Rational(2, 3));
  EXPECT_EQ(v[3], Rational(3, 4));
}

}  // namespace
}  // namespace comax
