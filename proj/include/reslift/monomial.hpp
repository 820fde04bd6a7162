#ifndef RESLIFT_MONOMIAL_HPP
#define RESLIFT_MONOMIAL_HPP

#include <vector>

#include "reslift/errors.hpp"

namespace reslift {

// Exponent vector in a fixed number of variables.  Ordering lives elsewhere
// (MonomialOrder); a Monomial only knows the divisibility lattice.
class Monomial {
 public:
  explicit Monomial(int nvars) : e_(nvars, 0) {}
  explicit Monomial(std::vector<int> e) : e_(std::move(e)) {}

  int nvars() const { return static_cast<int>(e_.size()); }
  int operator[](int i) const { return e_[i]; }
  const std::vector<int>& exponents() const { return e_; }

  int total_degree() const {
    int d = 0;
    for (int x : e_) d += x;
    return d;
  }
  bool is_one() const {
    for (int x : e_) if (x != 0) return false;
    return true;
  }

  Monomial mul(const Monomial& o) const {
    Monomial r = check(o);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
  }
  bool divides(const Monomial& o) const {  // this | o
    check(o);
    for (size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }
  Monomial div(const Monomial& o) const;  // this / o, throws unless o | this
  Monomial lcm(const Monomial& o) const {
    Monomial r = check(o);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] > o.e_[i] ? e_[i] : o.e_[i];
    return r;
  }
  Monomial gcd(const Monomial& o) const {
    Monomial r = check(o);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] < o.e_[i] ? e_[i] : o.e_[i];
    return r;
  }
  bool coprime(const Monomial& o) const { return gcd(o).is_one(); }

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return e_ != o.e_; }

 private:
  // Returns a zeroed monomial of matching width; throws on width mismatch.
  Monomial check(const Monomial& o) const;
  std::vector<int> e_;
};

inline Monomial Monomial::check(const Monomial& o) const {
  if (e_.size() != o.e_.size()) throw DomainError("monomials from different rings");
  return Monomial(static_cast<int>(e_.size()));
}

inline Monomial Monomial::div(const Monomial& o) const {
  Monomial r = check(o);
  for (size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] < o.e_[i]) throw DomainError("monomial division is not exact");
    r.e_[i] = e_[i] - o.e_[i];
  }
  return r;
}

}  // namespace reslift

#endif
