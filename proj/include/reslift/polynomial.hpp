#ifndef RESLIFT_POLYNOMIAL_HPP
#define RESLIFT_POLYNOMIAL_HPP

#include <utility>
#include <vector>

#include "reslift/rational.hpp"
#include "reslift/ring.hpp"

namespace reslift {

using Term = std::pair<Monomial, Rational>;

// Sparse multivariate polynomial over QQ.  Terms are kept strictly
// decreasing under the ring's ambient order with no zero coefficients, so
// equality is plain term-list equality and the leading term is terms()[0].
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
  static Polynomial constant(RingPtr ring, const Rational& c);
  static Polynomial variable(RingPtr ring, int var);
  static Polynomial term(RingPtr ring, Monomial m, const Rational& c);
  // Sorts, merges duplicates, drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || terms_[0].first.is_one(); }

  // All three throw DomainError on the zero polynomial.
  const Monomial& leading_monomial() const;
  const Rational& leading_coefficient() const;
  const Term& leading_term() const;
  // Leading term under a different order than the ring's (linear scan).
  Term leading_term_under(const MonomialOrder& ord) const;

  // Degree of the zero polynomial is -1 by convention.
  int total_degree() const;
  Rational constant_term() const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }

  Polynomial scaled(const Rational& c) const;          // c * this
  Polynomial times_term(const Monomial& m, const Rational& c) const;
  Polynomial monic() const;  // divide by leading coefficient

  Polynomial derivative(int var) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

}  // namespace reslift

#endif
