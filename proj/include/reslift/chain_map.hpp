#pragma once

#include <vector>

#include "reslift/complex.hpp"
#include "reslift/matrix.hpp"
#include "reslift/module.hpp"

namespace reslift {

// A map of complexes a : F -> E with blocks a_k : F_k -> E_k for
// k = 0 .. min(length F, length E).
struct ChainMap {
  std::vector<PolyMatrix> blocks;
};

struct ChainMapCheck {
  bool valid = false;
  // phi_k a_k - a_{k-1} psi_k for k = 1..m; when the source is longer than
  // the target a final block a_m psi_{m+1} is appended, which must vanish.
  std::vector<PolyMatrix> residuals;
};

ChainMapCheck validate_chain_map(const Complex& source, const Complex& target,
                                 const ChainMap& a);

// Extend a degree-zero block to a full chain map by lifting column by
// column through the target maps.  The module order only steers which
// preimages are picked; any two choices are chain homotopic.
ChainMap lift_morphism(const Complex& source, const Complex& target, const PolyMatrix& a0,
                       ModulePosition pos = ModulePosition::PositionOverTerm);

// Homotopy blocks s_k : F_k -> E_{k+1} witnessing
//   a_k - b_k = phi_{k+1} s_k + s_{k-1} psi_k     (s_{-1} = 0).
struct Homotopy {
  std::vector<PolyMatrix> blocks;
};

Homotopy homotopy_between(const Complex& source, const Complex& target, const ChainMap& a,
                          const ChainMap& b);

bool validate_homotopy(const Complex& source, const Complex& target, const ChainMap& a,
                       const ChainMap& b, const Homotopy& s);

// Chain map between Koszul complexes induced by a square matrix relating
// the two tuples, f = g * a: block k is the k-th exterior power of a, the
// matrix of k x k minors over lexicographic index subsets.
ChainMap det_lift_koszul(const PolyMatrix& a);

}  // namespace reslift
