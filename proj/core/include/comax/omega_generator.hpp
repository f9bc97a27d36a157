#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "comax/omega.hpp"
#include "comax/rational.hpp"

namespace comax {

/// Nondecreasing, continuous, piecewise-linear map [0,1] -> [0,1] through
/// the points (xs[i], ys[i]); xs runs strictly from 0 to 1.
class PiecewiseLinear {
 public:
  PiecewiseLinear(std::vector<Rational> xs, std::vector<Rational> ys);

  static PiecewiseLinear identity();
  static PiecewiseLinear constant(const Rational& c);

  Rational operator()(const Rational& s) const;
  std::span<const Rational> breakpoints() const { return xs_; }

  /// Slope and intercept of the piece used on a neighbourhood of `s` that
  /// contains no interior breakpoint other than possibly `s` itself,
  /// approaching from the side given by `from_below`.
  std::pair<Rational, Rational> piece_at(const Rational& s, bool from_below) const;

 private:
  std::vector<Rational> xs_;
  std::vector<Rational> ys_;
};

/// phi o h, still representable: the prefix is extended past every point
/// where the tail of h crosses a breakpoint of phi.
OmegaFunction compose(const PiecewiseLinear& phi, const OmegaFunction& h);

struct GeneratorParams {
  unsigned prefix_max = 2;
  unsigned max_denominator = 8;
  unsigned max_breakpoints = 3;
};

/// splitmix64 of (seed, index): independent per-sample streams, so sharded
/// runs draw the same samples as serial ones.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

Rational random_unit_rational(std::mt19937_64& rng, unsigned max_denominator);
OmegaFunction random_omega_function(std::mt19937_64& rng, const GeneratorParams& params);
PiecewiseLinear random_monotone_map(std::mt19937_64& rng, const GeneratorParams& params);

/// f = phi o h and g = psi o h for random h and nondecreasing phi, psi.
/// Deterministic per seed. The pair is re-checked with comonotone_omega and
/// std::logic_error is thrown if that ever fails.
std::pair<OmegaFunction, OmegaFunction> generate_comonotone_pair(std::uint64_t seed, const GeneratorParams& params);

/// Two independent random functions (usually not comonotone).
std::pair<OmegaFunction, OmegaFunction> generate_independent_pair(std::uint64_t seed, const GeneratorParams& params);

}  // namespace comax
