#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "comax/finite_lab.hpp"
#include "comax/grid.hpp"
#include "comax/report.hpp"

namespace comax {

/// A functional on chain-valued functions given by its full value table.
/// table[code] is the chain index of F(f) for the function with that code.
struct TabulatedFunctional {
  GridChain chain;
  std::size_t n = 0;
  std::vector<std::uint8_t> table;

  /// Only defined on chain-valued functions.
  Rational operator()(const GridFunction& f) const { return chain[table.at(function_code(chain, f))]; }
  Functional as_functional() const {
    return [self = *this](const GridFunction& f) { return self(f); };
  }
};

/// Thrown when an enumeration would exceed the caller's budget.
class BudgetExceeded : public DomainError {
 public:
  BudgetExceeded(mpz_class required, std::uint64_t budget);

  const mpz_class& required() const { return required_; }
  std::uint64_t budget() const { return budget_; }

 private:
  mpz_class required_;
  std::uint64_t budget_;
};

/// |chain|^(|chain|^n), exactly.
mpz_class functional_count(const GridChain& chain, std::size_t n);

/// Throws BudgetExceeded unless functional_count(chain, n) <= budget.
std::uint64_t checked_functional_count(const GridChain& chain, std::size_t n, std::uint64_t budget);

/// Visits every total table in lexicographic order (entry for code 0 most
/// significant), ordinals [first, last). Each table is emitted once.
void enumerate_functionals(const GridChain& chain, std::size_t n, std::uint64_t budget,
                           const std::function<void(std::uint64_t ordinal, const TabulatedFunctional&)>& visit,
                           std::uint64_t first = 0, std::uint64_t last = UINT64_MAX);

struct CensusOptions {
  std::uint64_t budget = 10'000'000;
  unsigned jobs = 1;
};

/// Classifies every tabulated functional as comonotonically maxitive and/or
/// monotone. Reports how many are maxitive on comonotone pairs but not
/// monotone (a finding if nonzero) and exhibits the first monotone functional
/// that is not comonotonically maxitive, with its witness pair.
VerificationReport theorem1_census(const GridChain& chain, std::size_t n, const CensusOptions& options = {});

}  // namespace comax
