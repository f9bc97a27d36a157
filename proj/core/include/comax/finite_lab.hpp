#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>

#include "comax/grid.hpp"
#include "comax/rational.hpp"
#include "comax/tnorm.hpp"

namespace comax {

/// (f(i)-f(j)) * (g(i)-g(j)) >= 0 for every pair of points.
bool comonotone_finite(const GridFunction& f, const GridFunction& g);

GridFunction join_finite(const GridFunction& f, const GridFunction& g);
GridFunction meet_finite(const GridFunction& f, const GridFunction& g);

/// Pointwise c * phi(i).
GridFunction scale(TNorm norm, const Rational& c, const GridFunction& phi);

/// max over thresholds t in values(f) + {0,1} of t * mu({i : f(i) >= t}).
/// With the minimum norm this is the Sugeno integral.
Rational tnormed_integral(const Capacity& cap, TNorm norm, const GridFunction& f);

/// A functional on [0,1]^n, evaluated on demand.
using Functional = std::function<Rational(const GridFunction&)>;

Functional make_integral_functional(Capacity cap, TNorm norm);

struct PairWitness {
  GridFunction first;
  GridFunction second;
};

struct PairCheck {
  bool holds = true;
  std::optional<PairWitness> witness;

  explicit operator bool() const { return holds; }
};

struct HomogeneityWitness {
  Rational c;
  GridFunction phi;
};

struct HomogeneityCheck {
  bool holds = true;
  std::optional<HomogeneityWitness> witness;

  explicit operator bool() const { return holds; }
};

/// F(c_X) = c for every c in the chain.
bool is_normalized(const Functional& F, const GridChain& chain, std::size_t n);

/// F(f v g) = max(F(f), F(g)) over all comonotone pairs of chain-valued
/// functions. The first violating pair in code order is the witness.
PairCheck is_comonotonically_maxitive(const Functional& F, const GridChain& chain, std::size_t n);

/// Same equation without the comonotonicity filter.
PairCheck is_maxitive(const Functional& F, const GridChain& chain, std::size_t n);

/// f <= g implies F(f) <= F(g) over all chain-valued pairs.
PairCheck is_monotone(const Functional& F, const GridChain& chain, std::size_t n);

/// Extra rational samples for norms the chain is not closed under.
struct HomogeneitySampling {
  std::uint64_t seed = 0;
  std::size_t samples = 256;
  unsigned max_denominator = 12;
};

/// F(c_X * phi) = c * F(phi). Exhaustive over chain constants and chain
/// functions; when the chain is not closed under the norm (product on a
/// uniform grid) seeded rational samples of c and phi are added as well.
HomogeneityCheck is_star_homogeneous(const Functional& F, TNorm norm, const GridChain& chain, std::size_t n,
                                     const HomogeneitySampling& sampling = {});

struct TStarMembership {
  bool normalized = false;
  PairCheck maxitive;
  HomogeneityCheck homogeneous;

  bool member() const { return normalized && maxitive.holds && homogeneous.holds; }
};

TStarMembership is_in_T_star(const Functional& F, TNorm norm, const GridChain& chain, std::size_t n,
                             const HomogeneitySampling& sampling = {});

}  // namespace comax
