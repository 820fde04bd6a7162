#include "reslift/polynomial.hpp"

#include <algorithm>

#include "reslift/errors.hpp"

namespace reslift {

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
  if (!ring) throw DomainError("null ring");
  Monomial one(ring->nvars());
  return term(std::move(ring), std::move(one), c);
}

Polynomial Polynomial::variable(RingPtr ring, int var) {
  if (!ring || var < 0 || var >= ring->nvars()) throw DomainError("variable index out of range");
  std::vector<int> e(ring->nvars(), 0);
  e[var] = 1;
  return term(std::move(ring), Monomial(std::move(e)), Rational(1));
}

Polynomial Polynomial::term(RingPtr ring, Monomial m, const Rational& c) {
  Polynomial p(std::move(ring));
  if (!p.ring_) throw DomainError("null ring");
  if (m.nvars() != p.ring_->nvars()) throw DomainError("monomial/ring variable count mismatch");
  if (!c.is_zero()) p.terms_.emplace_back(std::move(m), c);
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  if (!p.ring_) throw DomainError("null ring");
  const MonomialOrder& ord = p.ring_->order();
  for (const Term& t : terms)
    if (t.first.nvars() != p.ring_->nvars())
      throw DomainError("monomial/ring variable count mismatch");
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return ord.greater(a.first, b.first);
  });
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      if (p.terms_.back().second.is_zero()) p.terms_.pop_back();
    } else if (!t.second.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

const Monomial& Polynomial::leading_monomial() const { return leading_term().first; }
const Rational& Polynomial::leading_coefficient() const { return leading_term().second; }

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
  return terms_[0];
}

Term Polynomial::leading_term_under(const MonomialOrder& ord) const {
  if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
  const Term* best = &terms_[0];
  for (const Term& t : terms_)
    if (ord.greater(t.first, best->first)) best = &t;
  return *best;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const Term& t : terms_) d = std::max(d, t.first.total_degree());
  return d;
}

Rational Polynomial::constant_term() const {
  for (const Term& t : terms_)
    if (t.first.is_one()) return t.second;
  return Rational(0);
}

Polynomial Polynomial::operator-() const {
  Polynomial p(ring_);
  p.terms_.reserve(terms_.size());
  for (const Term& t : terms_) p.terms_.emplace_back(t.first, -t.second);
  return p;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_);
  const MonomialOrder& ord = ring_->order();
  Polynomial p(ring_);
  p.terms_.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = ord.compare(terms_[i].first, o.terms_[j].first);
    if (c > 0) {
      p.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      p.terms_.push_back(o.terms_[j++]);
    } else {
      Rational s = terms_[i].second + o.terms_[j].second;
      if (!s.is_zero()) p.terms_.emplace_back(terms_[i].first, s);
      ++i, ++j;
    }
  }
  for (; i < terms_.size(); ++i) p.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) p.terms_.push_back(o.terms_[j]);
  return p;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_);
  std::vector<Term> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const Term& a : terms_)
    for (const Term& b : o.terms_)
      prod.emplace_back(a.first.mul(b.first), a.second * b.second);
  return from_terms(ring_, std::move(prod));
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c.is_zero()) return Polynomial(ring_);
  Polynomial p(ring_);
  p.terms_.reserve(terms_.size());
  for (const Term& t : terms_) p.terms_.emplace_back(t.first, c * t.second);
  return p;
}

Polynomial Polynomial::times_term(const Monomial& m, const Rational& c) const {
  if (c.is_zero()) return Polynomial(ring_);
  Polynomial p(ring_);
  p.terms_.reserve(terms_.size());
  // Multiplying by a single monomial preserves the order of the term list.
  for (const Term& t : terms_) p.terms_.emplace_back(t.first.mul(m), c * t.second);
  return p;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) throw DomainError("monic of the zero polynomial");
  return scaled(leading_coefficient().inverse());
}

Polynomial Polynomial::derivative(int var) const {
  if (var < 0 || var >= ring_->nvars()) throw DomainError("variable index out of range");
  std::vector<Term> out;
  for (const Term& t : terms_) {
    int e = t.first[var];
    if (e == 0) continue;
    std::vector<int> exps = t.first.exponents();
    exps[var] = e - 1;
    out.emplace_back(Monomial(std::move(exps)), t.second * Rational(e));
  }
  return from_terms(ring_, std::move(out));
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (!same_ring(ring_, o.ring_)) return false;
  return terms_ == o.terms_;
}

}  // namespace reslift
