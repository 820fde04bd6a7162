#include "reslift/rational.hpp"

#include "reslift/errors.hpp"

namespace reslift {

Rational::Rational(long n, long d) {
  if (d == 0) throw DomainError("zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational::Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

Rational Rational::from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(mpq_class(mpz_class(s)));
    mpz_class num(s.substr(0, slash));
    mpz_class den(s.substr(slash + 1));
    if (den == 0) throw DomainError("zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(q);
  } catch (const std::invalid_argument&) {
    throw DomainError("malformed rational literal '" + s + "'");
  }
}

Rational Rational::operator/(const Rational& o) const {
  if (o.is_zero()) throw DomainError("division by zero");
  return Rational(mpq_class(v_ / o.v_));
}

Rational Rational::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  return Rational(mpq_class(1 / v_));
}

std::string Rational::str() const {
  return v_.get_den() == 1 ? v_.get_num().get_str() : v_.get_str();
}

Rational rat_normalize(long num, long den) { return Rational(num, den); }

}  // namespace reslift
