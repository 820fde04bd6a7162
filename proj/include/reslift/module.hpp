#pragma once

#include <vector>

#include "reslift/matrix.hpp"
#include "reslift/polynomial.hpp"

namespace reslift {

// Elements of a free module O^r, stored densely by component.
using VecPoly = std::vector<Polynomial>;

// Position-over-term compares component first (higher index wins), then the
// ring order; term-over-position compares monomials first, breaking ties by
// higher component.
enum class ModulePosition { PositionOverTerm, TermOverPosition };

VecPoly vec_zero(const RingPtr& ring, int rank);
bool vec_is_zero(const VecPoly& v);
VecPoly vec_add(const VecPoly& a, const VecPoly& b);
VecPoly vec_sub(const VecPoly& a, const VecPoly& b);
VecPoly vec_scaled(const VecPoly& v, const Rational& c);
VecPoly vec_times_term(const VecPoly& v, const Monomial& m, const Rational& c);

struct ModLead {
  int comp;
  Monomial mono;
  Rational coef;
};

int module_term_compare(const MonomialOrder& ord, ModulePosition pos, int comp_a,
                        const Monomial& mono_a, int comp_b, const Monomial& mono_b);

// Leading term of a nonzero module element; throws DomainError on zero.
ModLead module_lead(const VecPoly& v, const MonomialOrder& ord, ModulePosition pos);

struct ModuleDivision {
  VecPoly remainder;
  std::vector<Polynomial> quotients;  // v = sum quotients[i] * gens[i] + remainder
};

ModuleDivision module_normal_form(const VecPoly& v, const std::vector<VecPoly>& gens,
                                  const MonomialOrder& ord, ModulePosition pos);

struct ModuleGB {
  RingPtr ring;
  int rank = 0;
  std::vector<VecPoly> elements;                    // reduced basis, monic, sorted
  std::vector<std::vector<Polynomial>> to_basis;    // s x t: elements = gens . to_basis
  std::vector<std::vector<Polynomial>> from_basis;  // t x s: gens = elements . from_basis
};

ModuleGB module_groebner(const RingPtr& ring, int rank, const std::vector<VecPoly>& gens,
                         ModulePosition pos = ModulePosition::PositionOverTerm,
                         bool use_criteria = true);

// Canonical generating set for the syzygies of the columns of a: the result
// s satisfies a * s == 0 and its columns generate every relation.
PolyMatrix syzygies(const PolyMatrix& a, ModulePosition pos = ModulePosition::PositionOverTerm);

// Solve a * x == b column by column; throws LiftError naming the first
// column of b with no preimage.
PolyMatrix lift_through(const PolyMatrix& a, const PolyMatrix& b,
                        ModulePosition pos = ModulePosition::PositionOverTerm);

}  // namespace reslift
