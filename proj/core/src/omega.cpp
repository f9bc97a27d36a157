#include "comax/omega.hpp"

#include <algorithm>
#include <array>

namespace comax {

namespace {

Rational from_u64(std::uint64_t v) {
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return Rational(mpq_class(z));
}

std::uint64_t to_u64(const mpz_class& z) {
  if (sgn(z) < 0 || mpz_sizeinbase(z.get_mpz_t(), 2) > 64) throw DomainError("index out of range: " + z.get_str());
  std::uint64_t v = 0;
  mpz_export(&v, nullptr, 1, sizeof(v), 0, 0, z.get_mpz_t());
  return v;
}

void check_extension(std::uint64_t m) {
  if (m > kMaxPrefixLength) {
    throw DomainError("prefix extension to " + std::to_string(m) + " points exceeds the representation limit");
  }
}

/// Both functions with their prefixes extended to a common length.
struct Aligned {
  std::uint64_t length;
  std::vector<Rational> f;
  std::vector<Rational> g;
};

Aligned align(const OmegaFunction& f, const OmegaFunction& g, std::uint64_t at_least = 0) {
  const std::uint64_t m = std::max<std::uint64_t>({f.prefix_length(), g.prefix_length(), at_least});
  check_extension(m);
  return {m, f.prefix_through(m), g.prefix_through(m)};
}

/// Open interval on the real line; nullopt bounds are infinite.
struct OpenInterval {
  bool empty = false;
  std::optional<Rational> lo;
  std::optional<Rational> hi;

  static OpenInterval everything() { return {}; }
  static OpenInterval nothing() { return {true, std::nullopt, std::nullopt}; }

  OpenInterval intersect(const OpenInterval& o) const {
    if (empty || o.empty) return nothing();
    OpenInterval r;
    r.lo = !lo ? o.lo : (!o.lo ? lo : std::optional<Rational>(max(*lo, *o.lo)));
    r.hi = !hi ? o.hi : (!o.hi ? hi : std::optional<Rational>(min(*hi, *o.hi)));
    if (r.lo && r.hi && *r.lo >= *r.hi) return nothing();
    return r;
  }
};

/// {t : slope*t + offset > 0} (sign = +1) or < 0 (sign = -1).
OpenInterval sign_region(const Rational& slope, const Rational& offset, int sign) {
  if (slope.sign() == 0) return offset.sign() == sign ? OpenInterval::everything() : OpenInterval::nothing();
  const Rational root = -offset / slope;
  if (slope.sign() == sign) return {false, root, std::nullopt};
  return {false, std::nullopt, root};
}

/// Smallest n >= n_min with a_n strictly inside the interval, if any.
std::optional<std::uint64_t> first_index_inside(const OpenInterval& iv, std::uint64_t n_min) {
  if (iv.empty) return std::nullopt;
  const Rational one(1);

  mpz_class lo = from_u64(n_min).numerator();
  if (iv.lo && iv.lo->sign() >= 0) {
    if (*iv.lo >= one) return std::nullopt;
    // a_n > l  <=>  n > 1/(1-l)
    const mpz_class k = (one / (one - *iv.lo)).floor() + 1;
    if (k > lo) lo = k;
  }
  if (iv.hi && *iv.hi < one) {
    if (iv.hi->sign() <= 0) return std::nullopt;
    // a_n < r  <=>  n < 1/(1-r)
    const mpz_class hi = (one / (one - *iv.hi)).ceil() - 1;
    if (lo > hi) return std::nullopt;
  }
  return to_u64(lo);
}

OmegaFunction combine(const OmegaFunction& f, const OmegaFunction& g, bool take_max) {
  const auto pick = [take_max](const Rational& a, const Rational& b) { return take_max ? max(a, b) : min(a, b); };

  // d(t) = tail_f(t) - tail_g(t) on [a_{m+1}, 1].
  std::uint64_t m = std::max(f.prefix_length(), g.prefix_length());
  const Rational dslope = f.alpha() - g.alpha();
  const Rational doffset = f.beta() - g.beta();
  const Rational d_left = dslope * index_position(m + 1) + doffset;
  const Rational d_right = dslope + doffset;

  bool f_tail;
  if (d_left.sign() >= 0 && d_right.sign() >= 0) {
    f_tail = take_max;
  } else if (d_left.sign() <= 0 && d_right.sign() <= 0) {
    f_tail = !take_max;
  } else {
    // Strict sign change: a single crossing t* in (a_{m+1}, 1). Points with
    // a_n <= t* go into the prefix; past it the winner at 1 dominates.
    const Rational crossing = -doffset / dslope;
    const mpz_class last = (Rational(1) / (Rational(1) - crossing)).floor();
    m = std::max(m, to_u64(last));
    f_tail = (d_right.sign() > 0) == take_max;
  }

  const Aligned a = align(f, g, m);
  std::vector<Rational> prefix(a.length);
  for (std::uint64_t i = 0; i < a.length; ++i) prefix[i] = pick(a.f[i], a.g[i]);
  const OmegaFunction& tail = f_tail ? f : g;
  return OmegaFunction::make(pick(f.vP(), g.vP()), std::move(prefix), tail.alpha(), tail.beta());
}

}  // namespace

OmegaPoint OmegaPoint::index(std::uint64_t n) {
  if (n == 0) throw DomainError("sequence points are indexed from 1");
  return OmegaPoint(Kind::Index, n);
}

Rational OmegaPoint::position() const {
  switch (kind_) {
    case Kind::P: return Rational(2);
    case Kind::Index: return index_position(n_);
    case Kind::Limit: return Rational(1);
  }
  return Rational(1);
}

std::string OmegaPoint::str() const {
  switch (kind_) {
    case Kind::P: return "P";
    case Kind::Index: return "Index(" + std::to_string(n_) + ")";
    case Kind::Limit: return "Limit";
  }
  return "Limit";
}

OmegaPoint OmegaPoint::parse(const std::string& text) {
  if (text == "P") return p();
  if (text == "Limit") return limit();
  if (text.size() > 7 && text.starts_with("Index(") && text.back() == ')') {
    const std::string digits = text.substr(6, text.size() - 7);
    if (!digits.empty() && std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      return index(std::stoull(digits));
    }
  }
  throw DomainError("malformed point \"" + text + "\"");
}

Rational index_position(std::uint64_t n) {
  if (n == 0) throw DomainError("sequence points are indexed from 1");
  return Rational(1) - Rational(1) / from_u64(n);
}

OmegaFunction OmegaFunction::make(Rational vP, std::vector<Rational> prefix, Rational alpha, Rational beta) {
  require_unit(vP, "value at P");
  for (std::size_t i = 0; i < prefix.size(); ++i) require_unit(prefix[i], "value at Index(" + std::to_string(i + 1) + ")");

  OmegaFunction f;
  f.vP_ = std::move(vP);
  f.prefix_ = std::move(prefix);
  f.alpha_ = std::move(alpha);
  f.beta_ = std::move(beta);
  while (!f.prefix_.empty() && f.prefix_.back() == f.tail_at(f.prefix_.size())) f.prefix_.pop_back();

  // Affine on [a_{N+1}, 1]: the endpoints bound every tail value.
  require_unit(f.tail_at(f.prefix_.size() + 1), "tail value at Index(" + std::to_string(f.prefix_.size() + 1) + ")");
  require_unit(f.vLim(), "limit value");
  return f;
}

Rational OmegaFunction::tail_at(std::uint64_t n) const { return alpha_ * index_position(n) + beta_; }

Rational OmegaFunction::operator()(const OmegaPoint& x) const {
  switch (x.kind()) {
    case OmegaPoint::Kind::P: return vP_;
    case OmegaPoint::Kind::Limit: return vLim();
    case OmegaPoint::Kind::Index: return x.n() <= prefix_.size() ? prefix_[x.n() - 1] : tail_at(x.n());
  }
  return vLim();
}

std::vector<Rational> OmegaFunction::prefix_through(std::uint64_t m) const {
  check_extension(m);
  std::vector<Rational> out(prefix_.begin(), prefix_.end());
  out.reserve(std::max<std::uint64_t>(m, prefix_.size()));
  for (std::uint64_t n = prefix_.size() + 1; n <= m; ++n) out.push_back(tail_at(n));
  return out;
}

OmegaFunction make_constant(const Rational& c) {
  require_unit(c, "constant");
  return OmegaFunction::make(c, {}, Rational(0), c);
}

OmegaFunction make_f(int t) {
  if (t != 0 && t != 1) throw DomainError("f_t is defined for t in {0,1}");
  return OmegaFunction::make(Rational(t), {}, Rational(1), Rational(0));
}

Rational eval(const OmegaFunction& f, const OmegaPoint& x) { return f(x); }

bool leq(const OmegaFunction& f, const OmegaFunction& g) {
  if (f.vP() > g.vP()) return false;
  const Aligned a = align(f, g);
  for (std::uint64_t i = 0; i < a.length; ++i) {
    if (a.f[i] > a.g[i]) return false;
  }
  // g - f is affine on [a_{m+1}, 1]; nonnegative there iff at both endpoints.
  return f.tail_at(a.length + 1) <= g.tail_at(a.length + 1) && f.vLim() <= g.vLim();
}

AttainedMax attained_max(const OmegaFunction& f) {
  // The tail is monotone in a_n, so its extremes sit at Index(N+1) or at Limit.
  AttainedMax best{f.vP(), OmegaPoint::p()};
  const auto consider = [&](Rational v, OmegaPoint x) {
    if (v > best.value) best = {std::move(v), x};
  };
  const std::uint64_t n = f.prefix_length();
  for (std::uint64_t i = 1; i <= n; ++i) consider(f.prefix()[i - 1], OmegaPoint::index(i));
  consider(f.tail_at(n + 1), OmegaPoint::index(n + 1));
  consider(f.vLim(), OmegaPoint::limit());
  return best;
}

OmegaFunction join(const OmegaFunction& f, const OmegaFunction& g) { return combine(f, g, true); }
OmegaFunction meet(const OmegaFunction& f, const OmegaFunction& g) { return combine(f, g, false); }

ComonotoneResult comonotone_omega(const OmegaFunction& f, const OmegaFunction& g) {
  const Aligned a = align(f, g);
  const std::uint64_t m = a.length;

  // Fixed points: P, a_1..a_m, Limit.
  std::vector<OmegaPoint> fixed;
  std::vector<const Rational*> fv, gv;
  fixed.reserve(m + 2);
  const Rational f_lim = f.vLim(), g_lim = g.vLim();
  fixed.push_back(OmegaPoint::p());
  fv.push_back(&f.vP());
  gv.push_back(&g.vP());
  for (std::uint64_t i = 0; i < m; ++i) {
    fixed.push_back(OmegaPoint::index(i + 1));
    fv.push_back(&a.f[i]);
    gv.push_back(&a.g[i]);
  }
  fixed.push_back(OmegaPoint::limit());
  fv.push_back(&f_lim);
  gv.push_back(&g_lim);

  for (std::size_t i = 0; i < fixed.size(); ++i) {
    for (std::size_t j = i + 1; j < fixed.size(); ++j) {
      if (((*fv[i] - *fv[j]) * (*gv[i] - *gv[j])).sign() < 0) return {false, std::make_pair(fixed[i], fixed[j])};
    }
  }

  // Two tail points: the product is alpha_f * alpha_g * (a_n - a_k)^2.
  if (f.alpha().sign() * g.alpha().sign() < 0) {
    return {false, std::make_pair(OmegaPoint::index(m + 1), OmegaPoint::index(m + 2))};
  }

  // Tail point t = a_n (n > m) against a fixed point x0: the product of
  // (alpha_f t + beta_f - f(x0)) and (alpha_g t + beta_g - g(x0)) is negative
  // exactly where the two factors have strictly opposite signs.
  for (std::size_t i = 0; i < fixed.size(); ++i) {
    const Rational cf = f.beta() - *fv[i];
    const Rational cg = g.beta() - *gv[i];
    const std::array<OpenInterval, 2> negative = {
        sign_region(f.alpha(), cf, 1).intersect(sign_region(g.alpha(), cg, -1)),
        sign_region(f.alpha(), cf, -1).intersect(sign_region(g.alpha(), cg, 1)),
    };
    std::optional<std::uint64_t> hit;
    for (const OpenInterval& iv : negative) {
      const auto n = first_index_inside(iv, m + 1);
      if (n && (!hit || *n < *hit)) hit = n;
    }
    if (hit) return {false, std::make_pair(fixed[i], OmegaPoint::index(*hit))};
  }
  return {};
}

MembershipFlags membership(const OmegaFunction& f) {
  static const OmegaFunction f1 = make_f(1);
  MembershipFlags m;
  m.inF1 = leq(f, f1);
  const Rational top = attained_max(f).value;
  m.inF2 = top <= f.vP();
  m.inF3 = top < Rational(1);
  m.inG = m.inF1 && (m.inF2 || m.inF3);
  return m;
}

Rational nu_eval(const OmegaFunction& f) { return Rational(membership(f).inG ? 0 : 1); }

}  // namespace comax
