#include "comax/grid.hpp"

#include <algorithm>
#include <limits>

namespace comax {

GridChain::GridChain(std::vector<Rational> values) : values_(std::move(values)) {
  if (values_.size() < 2) throw DomainError("grid chain needs at least the values 0 and 1");
  if (values_.front() != Rational(0)) throw DomainError("grid chain must start at 0");
  if (values_.back() != Rational(1)) throw DomainError("grid chain must end at 1");
  for (std::size_t i = 1; i < values_.size(); ++i) {
    if (!(values_[i - 1] < values_[i])) throw DomainError("grid chain must be strictly increasing");
  }
}

GridChain GridChain::uniform(unsigned m) {
  if (m == 0) throw DomainError("uniform grid needs m >= 1");
  std::vector<Rational> v;
  v.reserve(m + 1);
  for (unsigned k = 0; k <= m; ++k) v.emplace_back(static_cast<long>(k), static_cast<long>(m));
  return GridChain(std::move(v));
}

std::optional<std::size_t> GridChain::index_of(const Rational& r) const {
  const auto it = std::lower_bound(values_.begin(), values_.end(), r);
  if (it == values_.end() || *it != r) return std::nullopt;
  return static_cast<std::size_t>(it - values_.begin());
}

bool GridChain::closed_under(TNorm norm) const {
  for (const Rational& s : values_) {
    for (const Rational& t : values_) {
      if (!contains(norm.apply(s, t))) return false;
    }
  }
  return true;
}

GridFunction::GridFunction(std::vector<Rational> values) : values_(std::move(values)) {
  for (const Rational& v : values_) require_unit(v, "function value");
}

GridFunction GridFunction::constant(std::size_t n, const Rational& c) {
  return GridFunction(std::vector<Rational>(n, c));
}

bool GridFunction::leq(const GridFunction& other) const {
  if (size() != other.size()) throw DomainError("grid functions of different lengths");
  for (std::size_t i = 0; i < size(); ++i) {
    if (values_[i] > other.values_[i]) return false;
  }
  return true;
}

std::uint64_t function_count(const GridChain& chain, std::size_t n) {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (count > std::numeric_limits<std::uint64_t>::max() / chain.size()) {
      throw DomainError("too many grid functions to index");
    }
    count *= chain.size();
  }
  return count;
}

std::uint64_t function_code(const GridChain& chain, const GridFunction& f) {
  std::uint64_t code = 0;
  for (const Rational& v : f.values()) {
    const auto idx = chain.index_of(v);
    if (!idx) throw DomainError("value " + v.str() + " is not in the grid chain");
    code = code * chain.size() + *idx;
  }
  return code;
}

GridFunction function_from_code(const GridChain& chain, std::size_t n, std::uint64_t code) {
  std::vector<Rational> v(n);
  for (std::size_t i = n; i-- > 0;) {
    v[i] = chain[code % chain.size()];
    code /= chain.size();
  }
  return GridFunction(std::move(v));
}

std::vector<GridFunction> all_functions(const GridChain& chain, std::size_t n) {
  const std::uint64_t count = function_count(chain, n);
  std::vector<GridFunction> out;
  out.reserve(count);
  for (std::uint64_t c = 0; c < count; ++c) out.push_back(function_from_code(chain, n, c));
  return out;
}

Capacity::Capacity(std::size_t n, std::vector<Rational> mu) : n_(n), mu_(std::move(mu)) {
  if (n_ == 0 || n_ > 16) throw DomainError("capacity size must be between 1 and 16");
  if (mu_.size() != (std::size_t{1} << n_)) throw DomainError("capacity table must have 2^n entries");
  for (const Rational& v : mu_) require_unit(v, "capacity value");
  if (mu_.front() != Rational(0)) throw DomainError("capacity of the empty set must be 0");
  if (mu_.back() != Rational(1)) throw DomainError("capacity of the whole space must be 1");
  // Monotonicity reduces to single-element extensions.
  for (std::uint32_t a = 0; a < mu_.size(); ++a) {
    for (std::size_t i = 0; i < n_; ++i) {
      const std::uint32_t b = a | (1u << i);
      if (mu_[a] > mu_[b]) {
        throw DomainError("capacity is not monotone: mu({" + subset_key(a) + "}) = " + mu_[a].str() + " > mu({" +
                          subset_key(b) + "}) = " + mu_[b].str());
      }
    }
  }
}

std::string Capacity::subset_key(std::uint32_t mask) {
  std::string key;
  for (unsigned i = 0; mask >> i; ++i) {
    if (mask & (1u << i)) key += std::to_string(i);
  }
  return key;
}

std::vector<Capacity> enumerate_capacities(const GridChain& chain, std::size_t n) {
  if (n == 0 || n > 4) throw DomainError("capacity enumeration supports 1 to 4 points");
  const std::uint32_t full = (1u << n) - 1u;
  std::vector<std::size_t> idx(std::size_t{1} << n, 0);
  idx[full] = chain.size() - 1;

  std::vector<Capacity> out;
  // Assign inner subsets in mask order; every proper submask precedes its
  // supersets, so pruning on submasks is enough.
  std::vector<std::uint32_t> inner;
  for (std::uint32_t m = 1; m < full; ++m) inner.push_back(m);

  const auto consistent = [&](std::uint32_t m) {
    for (std::size_t i = 0; i < n; ++i) {
      if ((m & (1u << i)) && idx[m & ~(1u << i)] > idx[m]) return false;
    }
    return true;
  };

  const auto recurse = [&](auto&& self, std::size_t pos) -> void {
    if (pos == inner.size()) {
      if (!consistent(full)) return;
      std::vector<Rational> mu(idx.size());
      for (std::size_t m = 0; m < idx.size(); ++m) mu[m] = chain[idx[m]];
      out.emplace_back(n, std::move(mu));
      return;
    }
    const std::uint32_t m = inner[pos];
    for (std::size_t v = 0; v < chain.size(); ++v) {
      idx[m] = v;
      if (consistent(m)) self(self, pos + 1);
    }
  };
  recurse(recurse, 0);
  return out;
}

}  // namespace comax
