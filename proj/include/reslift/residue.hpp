#pragma once

#include <optional>
#include <vector>

#include "reslift/chain_map.hpp"
#include "reslift/complex.hpp"
#include "reslift/groebner.hpp"

namespace reslift {

// Determinant of the matrix of partial derivatives of an n-tuple in n
// variables.
Polynomial jacobian_det(const std::vector<Polynomial>& f);

struct HickelVerdict {
  Polynomial jacobian;
  int codim = 0;
  bool member = false;                   // jacobian lies in the ideal of the tuple
  std::vector<Polynomial> certificate;  // witnesses membership when member is true
};

// Jacobian-membership criterion for an n-tuple vanishing at the origin:
// the jacobian determinant belongs to the ideal of the tuple exactly when
// the codimension of its zero locus is below the variable count.  The
// verdict asserts that biconditional (membership taken over the
// polynomial ring) and flags any violation as an engine error.
HickelVerdict hickel_test(const std::vector<Polynomial>& f);

struct ResidueReport {
  std::vector<Polynomial> tuple;         // f_1 .. f_p, the denominators
  std::vector<Polynomial> coefficients;  // entries of the top block of the lift
  std::vector<int> target_ranks;         // ranks of the resolution of the target
  Ideal congruence;                      // coefficients are well defined modulo this
};

// Transformation law between the residue of a length-p complete
// intersection tuple and the residue attached to a Cohen-Macaulay target
// ideal of the same codimension containing it: the coefficient column is
// the top block of the chain map lifting 1, well defined modulo the tuple.
ResidueReport transformation_report(const std::vector<Polynomial>& f, const Ideal& target,
                                    ModulePosition pos = ModulePosition::PositionOverTerm);

}  // namespace reslift
