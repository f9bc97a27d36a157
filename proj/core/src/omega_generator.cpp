#include "comax/omega_generator.hpp"

#include <algorithm>
#include <stdexcept>

#include "comax/json_io.hpp"

namespace comax {

PiecewiseLinear::PiecewiseLinear(std::vector<Rational> xs, std::vector<Rational> ys)
    : xs_(std::move(xs)), ys_(std::move(ys)) {
  if (xs_.size() < 2 || xs_.size() != ys_.size()) throw DomainError("piecewise-linear map needs matching breakpoints");
  if (xs_.front() != Rational(0) || xs_.back() != Rational(1)) throw DomainError("breakpoints must run from 0 to 1");
  for (std::size_t i = 0; i < xs_.size(); ++i) {
    require_unit(ys_[i], "map value");
    if (i > 0 && !(xs_[i - 1] < xs_[i])) throw DomainError("breakpoints must be strictly increasing");
    if (i > 0 && ys_[i - 1] > ys_[i]) throw DomainError("map must be nondecreasing");
  }
}

PiecewiseLinear PiecewiseLinear::identity() { return {{Rational(0), Rational(1)}, {Rational(0), Rational(1)}}; }

PiecewiseLinear PiecewiseLinear::constant(const Rational& c) { return {{Rational(0), Rational(1)}, {c, c}}; }

std::pair<Rational, Rational> PiecewiseLinear::piece_at(const Rational& s, bool from_below) const {
  // Segment k covers [xs[k], xs[k+1]].
  std::size_t k = 0;
  while (k + 2 < xs_.size() && (from_below ? s > xs_[k + 1] : s >= xs_[k + 1])) ++k;
  const Rational slope = (ys_[k + 1] - ys_[k]) / (xs_[k + 1] - xs_[k]);
  return {slope, ys_[k] - slope * xs_[k]};
}

Rational PiecewiseLinear::operator()(const Rational& s) const {
  require_unit(s, "map argument");
  const auto [slope, intercept] = piece_at(s, false);
  return slope * s + intercept;
}

OmegaFunction compose(const PiecewiseLinear& phi, const OmegaFunction& h) {
  const std::uint64_t n0 = h.prefix_length();
  std::uint64_t m = n0;
  const Rational one(1);

  if (h.alpha().sign() != 0) {
    // Tail positions t where alpha t + beta hits an interior breakpoint.
    for (const Rational& x : phi.breakpoints()) {
      const Rational t = (x - h.beta()) / h.alpha();
      if (t >= index_position(n0 + 1) && t < one) {
        const mpz_class last = (one / (one - t)).floor();
        if (!last.fits_ulong_p()) throw DomainError("breakpoint too close to the limit point");
        m = std::max<std::uint64_t>(m, last.get_ui());
      }
    }
  }

  std::vector<Rational> prefix;
  for (const Rational& v : h.prefix_through(m)) prefix.push_back(phi(v));

  // No breakpoint is crossed on [a_{m+1}, 1); h approaches h(1) from below
  // when alpha > 0 and from above when alpha < 0.
  const auto [slope, intercept] = phi.piece_at(h.vLim(), h.alpha().sign() > 0);
  OmegaFunction f = OmegaFunction::make(phi(h.vP()), std::move(prefix), slope * h.alpha(), slope * h.beta() + intercept);
  if (f.vLim() != phi(h.vLim())) throw std::logic_error("composition lost continuity at the limit point");
  return f;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Rational random_unit_rational(std::mt19937_64& rng, unsigned max_denominator) {
  std::uniform_int_distribution<long> den_dist(1, std::max(1u, max_denominator));
  const long den = den_dist(rng);
  std::uniform_int_distribution<long> num_dist(0, den);
  return Rational(num_dist(rng), den);
}

OmegaFunction random_omega_function(std::mt19937_64& rng, const GeneratorParams& params) {
  std::uniform_int_distribution<unsigned> len_dist(0, params.prefix_max);
  const unsigned n = len_dist(rng);
  const Rational vP = random_unit_rational(rng, params.max_denominator);
  std::vector<Rational> prefix(n);
  for (auto& v : prefix) v = random_unit_rational(rng, params.max_denominator);
  // The tail is pinned by its values at a_{n+1} and at the limit.
  const Rational first = random_unit_rational(rng, params.max_denominator);
  const Rational lim = random_unit_rational(rng, params.max_denominator);
  const Rational alpha = (lim - first) * Rational(static_cast<long>(n) + 1);
  return OmegaFunction::make(vP, std::move(prefix), alpha, lim - alpha);
}

PiecewiseLinear random_monotone_map(std::mt19937_64& rng, const GeneratorParams& params) {
  std::uniform_int_distribution<int> kind(0, 9);
  const int k = kind(rng);
  if (k == 0) return PiecewiseLinear::identity();
  if (k == 1) return PiecewiseLinear::constant(random_unit_rational(rng, params.max_denominator));

  std::uniform_int_distribution<unsigned> count_dist(0, params.max_breakpoints);
  std::vector<Rational> xs{Rational(0), Rational(1)};
  for (unsigned i = count_dist(rng); i > 0; --i) xs.push_back(random_unit_rational(rng, params.max_denominator));
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  std::vector<Rational> ys(xs.size());
  for (auto& y : ys) y = random_unit_rational(rng, params.max_denominator);
  std::sort(ys.begin(), ys.end());
  return {std::move(xs), std::move(ys)};
}

std::pair<OmegaFunction, OmegaFunction> generate_comonotone_pair(std::uint64_t seed, const GeneratorParams& params) {
  std::mt19937_64 rng(seed);
  const OmegaFunction h = random_omega_function(rng, params);
  const PiecewiseLinear phi = random_monotone_map(rng, params);
  const PiecewiseLinear psi = random_monotone_map(rng, params);
  auto pair = std::make_pair(compose(phi, h), compose(psi, h));

  if (const auto check = comonotone_omega(pair.first, pair.second); !check) {
    throw std::logic_error("generated pair is not comonotone (seed " + std::to_string(seed) + "): h = " +
                           to_json(h).dump() + ", f = " + to_json(pair.first).dump() + ", g = " +
                           to_json(pair.second).dump() + ", witness " + check.witness->first.str() + ", " +
                           check.witness->second.str());
  }
  return pair;
}

std::pair<OmegaFunction, OmegaFunction> generate_independent_pair(std::uint64_t seed, const GeneratorParams& params) {
  std::mt19937_64 rng(seed);
  OmegaFunction f = random_omega_function(rng, params);
  OmegaFunction g = random_omega_function(rng, params);
  return {std::move(f), std::move(g)};
}

}  // namespace comax
