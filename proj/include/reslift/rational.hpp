#ifndef RESLIFT_RATIONAL_HPP
#define RESLIFT_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace reslift {

// Exact rational number.  Always kept canonical: gcd(num, den) = 1, den > 0,
// zero is 0/1.  Backed by GMP so coefficient growth in Buchberger runs and
// determinant expansions is a non-issue.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors integer literals
  Rational(long n, long d);
  explicit Rational(const mpq_class& v);

  // Parses "n" or "n/d" with arbitrary-precision parts.
  static Rational from_string(const std::string& s);

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
  Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
  Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
  Rational operator/(const Rational& o) const;
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

  Rational inverse() const;
  Rational abs() const { return Rational(mpq_class(::abs(v_))); }

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  bool operator!=(const Rational& o) const { return v_ != o.v_; }
  bool operator<(const Rational& o) const { return v_ < o.v_; }
  bool operator<=(const Rational& o) const { return v_ <= o.v_; }
  bool operator>(const Rational& o) const { return v_ > o.v_; }
  bool operator>=(const Rational& o) const { return v_ >= o.v_; }

  std::string numerator() const { return v_.get_num().get_str(); }
  std::string denominator() const { return v_.get_den().get_str(); }
  bool is_integer() const { return v_.get_den() == 1; }

  // Canonical text: "n" when the denominator is 1, else "n/d".
  std::string str() const;

 private:
  mpq_class v_;
};

// Builds num/den in canonical form; zero denominator is a domain error.
Rational rat_normalize(long num, long den);

}  // namespace reslift

#endif
