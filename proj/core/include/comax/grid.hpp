#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "comax/rational.hpp"
#include "comax/tnorm.hpp"

namespace comax {

/// Finite stand-in for [0,1]: strictly increasing, starts at 0, ends at 1.
class GridChain {
 public:
  explicit GridChain(std::vector<Rational> values);

  /// {0, 1/m, ..., 1}.
  static GridChain uniform(unsigned m);

  std::span<const Rational> values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  const Rational& operator[](std::size_t i) const { return values_[i]; }

  std::optional<std::size_t> index_of(const Rational& r) const;
  bool contains(const Rational& r) const { return index_of(r).has_value(); }
  /// True when s*t stays in the chain for every s, t in it.
  bool closed_under(TNorm norm) const;

  friend bool operator==(const GridChain&, const GridChain&) = default;

 private:
  std::vector<Rational> values_;
};

/// A point of [0,1]^n: the value of a function at each of n points.
class GridFunction {
 public:
  GridFunction() = default;
  explicit GridFunction(std::vector<Rational> values);

  static GridFunction constant(std::size_t n, const Rational& c);

  std::size_t size() const { return values_.size(); }
  const Rational& operator[](std::size_t i) const { return values_[i]; }
  std::span<const Rational> values() const { return values_; }

  /// Pointwise order.
  bool leq(const GridFunction& other) const;

  friend bool operator==(const GridFunction&, const GridFunction&) = default;
  friend auto operator<=>(const GridFunction&, const GridFunction&) = default;

 private:
  std::vector<Rational> values_;
};

/// Number of grid functions, |chain|^n; throws DomainError on overflow.
std::uint64_t function_count(const GridChain& chain, std::size_t n);

/// Ordinal of a chain-valued function: base-|chain| digits, index 0 most
/// significant. Throws DomainError if a value is not in the chain.
std::uint64_t function_code(const GridChain& chain, const GridFunction& f);
GridFunction function_from_code(const GridChain& chain, std::size_t n, std::uint64_t code);

/// Every chain-valued function on n points, in code order.
std::vector<GridFunction> all_functions(const GridChain& chain, std::size_t n);

/// Monotone set function on {0..n-1}: mu(empty)=0, mu(all)=1.
/// Subsets are bitmasks, bit i standing for point i.
class Capacity {
 public:
  /// `mu` has 2^n entries indexed by subset mask.
  Capacity(std::size_t n, std::vector<Rational> mu);

  std::size_t size() const { return n_; }
  const Rational& operator()(std::uint32_t mask) const { return mu_[mask]; }
  std::span<const Rational> table() const { return mu_; }
  std::uint32_t full_mask() const { return (1u << n_) - 1u; }

  /// Sorted index string of a mask, e.g. 0b101 -> "02"; empty set -> "".
  static std::string subset_key(std::uint32_t mask);

 private:
  std::size_t n_;
  std::vector<Rational> mu_;
};

/// Every capacity on n points whose values lie in the chain.
std::vector<Capacity> enumerate_capacities(const GridChain& chain, std::size_t n);

}  // namespace comax
