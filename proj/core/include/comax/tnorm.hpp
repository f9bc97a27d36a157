#pragma once

#include <array>
#include <functional>
#include <span>
#include <string>
#include <string_view>

#include "comax/rational.hpp"
#include "comax/report.hpp"

namespace comax {

/// The built-in continuous t-norms. Closed set: every check over them is total.
enum class TNormKind { Minimum, Product, Lukasiewicz };

inline constexpr std::array<TNormKind, 3> kAllTNorms = {TNormKind::Minimum, TNormKind::Product,
                                                        TNormKind::Lukasiewicz};

/// "minimum", "product" or "lukasiewicz".
std::string_view to_string(TNormKind kind);
TNormKind tnorm_from_string(std::string_view name);

class TNorm {
 public:
  constexpr explicit TNorm(TNormKind kind) : kind_(kind) {}

  TNormKind kind() const { return kind_; }
  std::string_view name() const { return to_string(kind_); }

  /// s * t. Throws DomainError if either argument is outside [0,1].
  Rational apply(const Rational& s, const Rational& t) const;
  Rational operator()(const Rational& s, const Rational& t) const { return apply(s, t); }

  friend bool operator==(TNorm, TNorm) = default;

 private:
  TNormKind kind_;
};

Rational tnorm_apply(TNorm norm, const Rational& s, const Rational& t);

/// Any binary operation on [0,1]; lets the axiom checker run on candidates
/// that are not built-in norms.
using BinaryOperation = std::function<Rational(const Rational&, const Rational&)>;

/// Exhaustively checks commutativity, unit 1, monotonicity in the first
/// argument and associativity of `op` over every tuple drawn from `grid`.
/// Counts are exact; the first two violating tuples of each axiom become witnesses.
VerificationReport check_operation_axioms(std::string_view name, const BinaryOperation& op,
                                          std::span<const Rational> grid);

VerificationReport check_tnorm_axioms(TNorm norm, std::span<const Rational> grid);

}  // namespace comax
