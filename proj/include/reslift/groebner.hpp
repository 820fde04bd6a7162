#ifndef RESLIFT_GROEBNER_HPP
#define RESLIFT_GROEBNER_HPP

#include <optional>
#include <vector>

#include "reslift/polynomial.hpp"

namespace reslift {

// Finitely generated ideal of its ring.  Zero generators are dropped at
// construction; an empty list (or all zeros) is the zero ideal.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> gens);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
};

// Result of dividing p by an ordered list (g_1, ..., g_s):
//   p = sum_i quotients[i] * g_i + remainder,
// no remainder term divisible by any leading monomial of the g_i.
struct Division {
  Polynomial remainder;
  std::vector<Polynomial> quotients;
};

// Multivariate division.  Reducer choice is deterministic: at each step the
// lowest-index g_i whose leading monomial divides the current leading
// monomial.  The identity above holds exactly (checked by tests, not here).
Division normal_form(const Polynomial& p, const std::vector<Polynomial>& gens);

// Reduced Groebner basis with the change-of-basis matrices:
//   elements (as a row) = generators (as a row) * to_basis,
//   generators          = elements            * from_basis.
// Elements are monic, inter-reduced, sorted by decreasing leading monomial.
struct GroebnerBasis {
  RingPtr ring;
  std::vector<Polynomial> elements;
  std::vector<std::vector<Polynomial>> to_basis;    // s x t, column t_k represents elements[k]
  std::vector<std::vector<Polynomial>> from_basis;  // t x s, column f_j represents generators[j]
};

// Buchberger with the coprime-leading-term and chain pair criteria and the
// normal selection strategy (minimal lcm total degree, then lexicographic
// pair index).  `use_pair_criteria = false` runs the plain algorithm — the
// two must produce identical reduced bases (property-tested).
GroebnerBasis buchberger(const Ideal& ideal, bool use_pair_criteria = true);

struct Membership {
  bool member;
  // When member: p = sum_i certificate[i] * generators[i] exactly.
  std::vector<Polynomial> certificate;
};

Membership ideal_membership(const Polynomial& p, const Ideal& ideal);

// Equality of ideals via equality of reduced Groebner bases.
bool ideal_equal(const Ideal& a, const Ideal& b);

// p ≡ q modulo the ideal.
bool congruent_mod(const Polynomial& p, const Polynomial& q, const Ideal& ideal);

// Krull dimension of ring/I computed from the initial ideal: the largest
// subset S of variables such that no minimal generator of in(I) has all its
// variables inside S.  dim(ring/0) = nvars; the unit ideal returns -1.
int dimension(const Ideal& ideal);

// nvars - dimension; the unit ideal has infinite codimension (nullopt).
std::optional<int> codimension(const Ideal& ideal);

}  // namespace reslift

#endif
