#include <gtest/gtest.h>

#include <random>

#include "comax/omega_generator.hpp"
#include "support/oracles.hpp"

namespace comax {
namespace {

TEST(PiecewiseLinearTest, Evaluation) {
  const PiecewiseLinear phi({0, Rational(1, 2), 1}, {0, Rational(1, 4), 1});
  EXPECT_EQ(phi(Rational(1, 4)), Rational(1, 8));
  EXPECT_EQ(phi(Rational(3, 4)), Rational(5, 8));
  EXPECT_EQ(phi(Rational(1)), Rational(1));
  EXPECT_EQ(PiecewiseLinear::identity()(Rational(2, 7)), Rational(2, 7));
  EXPECT_EQ(PiecewiseLinear::constant(Rational(1, 3))(Rational(5, 7)), Rational(1, 3));
  EXPECT_THROW(PiecewiseLinear({0, 1}, {1, 0}), DomainError);
  EXPECT_THROW(PiecewiseLinear({0, Rational(1, 2)}, {0, 1}), DomainError);
}

TEST(PiecewiseLinearTest, PieceAtBreakpoint) {
  const PiecewiseLinear phi({0, Rational(1, 2), 1}, {0, Rational(1, 4), 1});
  EXPECT_EQ(phi.piece_at(Rational(1, 2), true), std::make_pair(Rational(1, 2), Rational(0)));
  EXPECT_EQ(phi.piece_at(Rational(1, 2), false), std::make_pair(Rational(3, 2), Rational(-1, 2)));
}

TEST(Compose, MatchesPointwiseComposition) {
  std::mt19937_64 rng(11);
  const GeneratorParams params;
  for (int t = 0; t < 500; ++t) {
    const auto h = testing::random_function(rng, 3, 6);
    const auto phi = random_monotone_map(rng, params);
    const auto f = compose(phi, h);
    for (const auto& x : testing::truncated_points(f.prefix_length() + 20)) {
      ASSERT_EQ(eval(f, x), phi(eval(h, x))) << x.str();
    }
  }
}

TEST(Compose, IdentityAndConstantMaps) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 100; ++t) {
    const auto h = testing::random_function(rng, 3, 6);
    EXPECT_EQ(compose(PiecewiseLinear::identity(), h), h);
    EXPECT_EQ(compose(PiecewiseLinear::constant(Rational(2, 5)), h), make_constant(Rational(2, 5)));
    EXPECT_TRUE(comonotone_omega(h, h));
    EXPECT_TRUE(comonotone_omega(h, make_constant(Rational(2, 5))));
  }
}

TEST(Generator, PairsAreComonotoneAndDeterministic) {
  const GeneratorParams params;
  for (std::uint64_t s = 0; s < 2000; ++s) {
    const auto seed = derive_seed(0, s);
    const auto [f, g] = generate_comonotone_pair(seed, params);
    EXPECT_TRUE(comonotone_omega(f, g));
    EXPECT_FALSE(testing::truncated_violation(f, g, 50).has_value());
    EXPECT_EQ(generate_comonotone_pair(seed, params), std::make_pair(f, g));
  }
}

TEST(Generator, SeedDerivationSpreads) {
  EXPECT_NE(derive_seed(0, 0), derive_seed(0, 1));
  EXPECT_NE(derive_seed(0, 1), derive_seed(1, 0));
  EXPECT_EQ(derive_seed(5, 7), derive_seed(5, 7));
}

TEST(Generator, IndependentPairsAreUsuallyNotComonotone) {
  int broken = 0;
  for (std::uint64_t s = 0; s < 500; ++s) {
    const auto [f, g] = generate_independent_pair(derive_seed(3, s), {});
    broken += !comonotone_omega(f, g).comonotone;
  }
  EXPECT_GT(broken, 100);
}

}  // namespace
}  // namespace comax
