#include "comax/finite_lab.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace comax {

namespace {

void require_same_length(const GridFunction& f, const GridFunction& g) {
  if (f.size() != g.size()) throw DomainError("grid functions of different lengths");
}

std::vector<Rational> tabulate(const Functional& F, const std::vector<GridFunction>& fs) {
  std::vector<Rational> out;
  out.reserve(fs.size());
  for (const GridFunction& f : fs) out.push_back(F(f));
  return out;
}

PairCheck check_join_preservation(const Functional& F, const GridChain& chain, std::size_t n, bool comonotone_only) {
  const auto fs = all_functions(chain, n);
  const auto values = tabulate(F, fs);
  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (std::size_t j = i + 1; j < fs.size(); ++j) {
      if (comonotone_only && !comonotone_finite(fs[i], fs[j])) continue;
      const std::uint64_t joined = function_code(chain, join_finite(fs[i], fs[j]));
      if (values[joined] != max(values[i], values[j])) return {false, PairWitness{fs[i], fs[j]}};
    }
  }
  return {};
}

Rational random_unit(std::mt19937_64& rng, unsigned max_denominator) {
  std::uniform_int_distribution<long> den_dist(1, static_cast<long>(max_denominator));
  const long den = den_dist(rng);
  std::uniform_int_distribution<long> num_dist(0, den);
  return Rational(num_dist(rng), den);
}

}  // namespace

bool comonotone_finite(const GridFunction& f, const GridFunction& g) {
  require_same_length(f, g);
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      if (((f[i] - f[j]) * (g[i] - g[j])).sign() < 0) return false;
    }
  }
  return true;
}

GridFunction join_finite(const GridFunction& f, const GridFunction& g) {
  require_same_length(f, g);
  std::vector<Rational> v(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) v[i] = max(f[i], g[i]);
  return GridFunction(std::move(v));
}

GridFunction meet_finite(const GridFunction& f, const GridFunction& g) {
  require_same_length(f, g);
  std::vector<Rational> v(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) v[i] = min(f[i], g[i]);
  return GridFunction(std::move(v));
}

GridFunction scale(TNorm norm, const Rational& c, const GridFunction& phi) {
  std::vector<Rational> v(phi.size());
  for (std::size_t i = 0; i < phi.size(); ++i) v[i] = norm.apply(c, phi[i]);
  return GridFunction(std::move(v));
}

Rational tnormed_integral(const Capacity& cap, TNorm norm, const GridFunction& f) {
  if (cap.size() != f.size()) throw DomainError("capacity and function live on different spaces");
  std::vector<Rational> thresholds(f.values().begin(), f.values().end());
  thresholds.emplace_back(0);
  thresholds.emplace_back(1);

  Rational best(0);
  for (const Rational& t : thresholds) {
    std::uint32_t level = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (f[i] >= t) level |= 1u << i;
    }
    best = max(best, norm.apply(t, cap(level)));
  }
  return best;
}

Functional make_integral_functional(Capacity cap, TNorm norm) {
  return [cap = std::move(cap), norm](const GridFunction& f) { return tnormed_integral(cap, norm, f); };
}

bool is_normalized(const Functional& F, const GridChain& chain, std::size_t n) {
  return std::all_of(chain.values().begin(), chain.values().end(),
                     [&](const Rational& c) { return F(GridFunction::constant(n, c)) == c; });
}

PairCheck is_comonotonically_maxitive(const Functional& F, const GridChain& chain, std::size_t n) {
  return check_join_preservation(F, chain, n, true);
}

PairCheck is_maxitive(const Functional& F, const GridChain& chain, std::size_t n) {
  return check_join_preservation(F, chain, n, false);
}

PairCheck is_monotone(const Functional& F, const GridChain& chain, std::size_t n) {
  const auto fs = all_functions(chain, n);
  const auto values = tabulate(F, fs);
  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (std::size_t j = 0; j < fs.size(); ++j) {
      if (i != j && fs[i].leq(fs[j]) && values[i] > values[j]) return {false, PairWitness{fs[i], fs[j]}};
    }
  }
  return {};
}

HomogeneityCheck is_star_homogeneous(const Functional& F, TNorm norm, const GridChain& chain, std::size_t n,
                                     const HomogeneitySampling& sampling) {
  const auto check = [&](const Rational& c, const GridFunction& phi) {
    return F(scale(norm, c, phi)) == norm.apply(c, F(phi));
  };

  const auto fs = all_functions(chain, n);
  for (const Rational& c : chain.values()) {
    for (const GridFunction& phi : fs) {
      if (!check(c, phi)) return {false, HomogeneityWitness{c, phi}};
    }
  }

  if (!chain.closed_under(norm)) {
    std::mt19937_64 rng(sampling.seed);
    for (std::size_t s = 0; s < sampling.samples; ++s) {
      const Rational c = random_unit(rng, sampling.max_denominator);
      std::vector<Rational> v(n);
      for (auto& x : v) x = random_unit(rng, sampling.max_denominator);
      GridFunction phi(std::move(v));
      if (!check(c, phi)) return {false, HomogeneityWitness{c, std::move(phi)}};
    }
  }
  return {};
}

TStarMembership is_in_T_star(const Functional& F, TNorm norm, const GridChain& chain, std::size_t n,
                             const HomogeneitySampling& sampling) {
  TStarMembership m;
  m.normalized = is_normalized(F, chain, n);
  m.maxitive = is_comonotonically_maxitive(F, chain, n);
  m.homogeneous = is_star_homogeneous(F, norm, chain, n, sampling);
  return m;
}

}  // namespace comax
