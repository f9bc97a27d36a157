#include "comax/rational.hpp"

#include <cctype>

namespace comax {

Rational::Rational(long num, long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto bad = [&] { return DomainError("malformed rational \"" + std::string(text) + "\""); };
  if (text.empty()) throw bad();

  const auto digits_ok = [](std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && s.front() == '-') s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
  };

  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!digits_ok(num, true) || !digits_ok(den, false)) throw bad();

  const mpz_class n{std::string(num)};
  const mpz_class d{std::string(den)};
  if (d == 0) throw DomainError("rational with zero denominator \"" + std::string(text) + "\"");
  return Rational(mpq_class(n, d));
}

mpz_class Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

mpz_class Rational::ceil() const {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

Rational& Rational::operator/=(const Rational& o) {
  if (sgn(o.value_) == 0) throw DomainError("division by zero");
  value_ /= o.value_;
  return *this;
}

void require_unit(const Rational& r, std::string_view what) {
  if (!r.in_unit_interval()) {
    throw DomainError(std::string(what) + " " + r.str() + " outside [0,1]");
  }
}

}  // namespace comax
