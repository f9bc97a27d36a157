#pragma once

// Exact model of the compactum X = {p} + {1 - 1/n : n >= 1} + {1} with p = 2,
// and of continuous functions on it that are eventually affine in the point
// position. Every decision here (order, maxima, comonotonicity) is exact.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "comax/rational.hpp"

namespace comax {

/// A point of X: the isolated point p, a_n = 1 - 1/n, or the limit point 1.
class OmegaPoint {
 public:
  enum class Kind { P, Index, Limit };

  static constexpr OmegaPoint p() { return OmegaPoint(Kind::P, 0); }
  static OmegaPoint index(std::uint64_t n);
  static constexpr OmegaPoint limit() { return OmegaPoint(Kind::Limit, 0); }

  Kind kind() const { return kind_; }
  /// Only meaningful for Index points.
  std::uint64_t n() const { return n_; }

  /// Position on the real line: 2, 1 - 1/n or 1.
  Rational position() const;

  /// "P", "Index(3)", "Limit".
  std::string str() const;
  static OmegaPoint parse(const std::string& text);

  friend bool operator==(const OmegaPoint&, const OmegaPoint&) = default;
  /// Reporting order: P, then Index by n, then Limit.
  friend auto operator<=>(const OmegaPoint&, const OmegaPoint&) = default;

 private:
  constexpr OmegaPoint(Kind k, std::uint64_t n) : kind_(k), n_(n) {}
  Kind kind_;
  std::uint64_t n_;
};

/// 1 - 1/n.
Rational index_position(std::uint64_t n);

/// Prefix extensions past this length are refused.
inline constexpr std::uint64_t kMaxPrefixLength = std::uint64_t{1} << 20;

/// Continuous f : X -> [0,1] given by its value at p, explicit values at
/// a_1..a_N, and the affine rule alpha * a_n + beta for n > N. The value at
/// the limit point is alpha + beta. Instances are always valid and canonical
/// (N minimal), so == is equality of functions.
class OmegaFunction {
 public:
  /// Validates ranges and canonicalizes. Throws DomainError.
  static OmegaFunction make(Rational vP, std::vector<Rational> prefix, Rational alpha, Rational beta);

  const Rational& vP() const { return vP_; }
  std::span<const Rational> prefix() const { return prefix_; }
  std::size_t prefix_length() const { return prefix_.size(); }
  const Rational& alpha() const { return alpha_; }
  const Rational& beta() const { return beta_; }
  Rational vLim() const { return alpha_ + beta_; }

  /// Value of the affine rule at a_n.
  Rational tail_at(std::uint64_t n) const;
  Rational operator()(const OmegaPoint& x) const;

  /// Values at a_1..a_m, m >= N (explicit prefix then the tail rule).
  std::vector<Rational> prefix_through(std::uint64_t m) const;

  friend bool operator==(const OmegaFunction&, const OmegaFunction&) = default;
  friend auto operator<=>(const OmegaFunction&, const OmegaFunction&) = default;

 private:
  OmegaFunction() = default;
  Rational vP_;
  std::vector<Rational> prefix_;
  Rational alpha_;
  Rational beta_;
};

OmegaFunction make_constant(const Rational& c);
/// f_t(p) = t and f_t(a) = a on the sequence and its limit; t in {0,1}.
OmegaFunction make_f(int t);

Rational eval(const OmegaFunction& f, const OmegaPoint& x);

/// Pointwise order over all of X.
bool leq(const OmegaFunction& f, const OmegaFunction& g);

struct AttainedMax {
  Rational value;
  OmegaPoint site = OmegaPoint::p();
};

/// Maximum over X with the first site in reporting order that attains it.
AttainedMax attained_max(const OmegaFunction& f);

OmegaFunction join(const OmegaFunction& f, const OmegaFunction& g);
OmegaFunction meet(const OmegaFunction& f, const OmegaFunction& g);

struct ComonotoneResult {
  bool comonotone = true;
  /// Points x1, x2 with (f(x1)-f(x2)) * (g(x1)-g(x2)) < 0.
  std::optional<std::pair<OmegaPoint, OmegaPoint>> witness;

  explicit operator bool() const { return comonotone; }
};

/// Exact comonotonicity over every pair of points of X, including the
/// infinitely many sequence points beyond the explicit prefixes.
ComonotoneResult comonotone_omega(const OmegaFunction& f, const OmegaFunction& g);

struct MembershipFlags {
  bool inF1 = false;  // f <= f_1
  bool inF2 = false;  // max f <= f(p)
  bool inF3 = false;  // max f < 1
  bool inG = false;   // F1 and (F2 or F3)
};

MembershipFlags membership(const OmegaFunction& f);

/// 0 on G, 1 elsewhere.
Rational nu_eval(const OmegaFunction& f);

}  // namespace comax
