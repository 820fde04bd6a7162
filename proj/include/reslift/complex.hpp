#pragma once

#include <optional>
#include <vector>

#include "reslift/groebner.hpp"
#include "reslift/matrix.hpp"

namespace reslift {

// A finite complex of free modules
//
//   0 <- E_0 <-phi_1- E_1 <-phi_2- ... <-phi_N- E_N <- 0
//
// stored as the list of maps phi_1 .. phi_N.  Adjacent shapes must agree,
// every module must have positive rank, and phi_k * phi_{k+1} must vanish.
class Complex {
 public:
  Complex(RingPtr ring, std::vector<PolyMatrix> maps);

  const RingPtr& ring() const { return ring_; }
  int length() const { return static_cast<int>(maps_.size()); }
  int rank(int k) const;               // rank of E_k, k = 0..N
  std::vector<int> ranks() const;      // [rank E_0, ..., rank E_N]
  const PolyMatrix& map(int k) const;  // phi_k, k = 1..N
  const std::vector<PolyMatrix>& maps() const { return maps_; }

 private:
  RingPtr ring_;
  std::vector<PolyMatrix> maps_;
};

// Koszul complex of the tuple f = (f_1, ..., f_p): rank(E_k) = C(p, k) with
// basis the k-element index subsets in lexicographic order, and
// delta(e_I) = sum_j (-1)^(j-1) f_(i_j) e_(I minus i_j).
Complex koszul(const RingPtr& ring, const std::vector<Polynomial>& f);

// Free resolution of O/ideal by iterated syzygies, with unit-constant
// pivots pruned as the maps are produced.  phi_1 is the row of generators;
// its columns may shrink only when pruning exposes a redundant generator.
// max_length < 0 uses the variable count as an internal bound whose
// violation is an engine error; an explicit bound that is exceeded reports
// a DomainError instead.
Complex free_resolution(const Ideal& ideal, int max_length = -1);

// Prune unit-constant pivots from maps k >= 2, propagating the basis
// changes to the neighbouring maps, and rescale the remaining columns so
// their leading coefficients are 1.  Throws MinimalizeError when an entry
// with a nonzero constant term but positive degree survives: such a unit
// is invertible only in the local ring at the origin.
Complex minimalized(const Complex& c);

// Expected ranks r_k = sum_{i >= k} (-1)^(i-k) rank E_i for k = 1..N.
std::vector<int> expected_ranks(const Complex& c);

// Ideal of the r_k x r_k minors of phi_k (unit ideal when r_k = 0, zero
// ideal when r_k exceeds the shape of phi_k).
Ideal fitting_support(const Complex& c, int k);

struct ExactnessReport {
  bool exact = false;
  std::vector<int> expected;               // r_1 .. r_N
  std::vector<std::optional<int>> codims;  // codim of each fitting support; empty = infinite
  std::vector<bool> passed;                // codim >= k, per k
};

// Acyclicity test: the complex is exact in positive degrees if and only if
// every fitting support has codimension at least its homological index.
ExactnessReport buchsbaum_eisenbud_exact(const Complex& c);

struct CmReport {
  bool cohen_macaulay = false;
  int length = 0;
  std::optional<int> codim;  // empty = infinite (unit ideal)
};

// O/ideal is Cohen-Macaulay iff its resolution length equals the
// codimension of the ideal.
CmReport cohen_macaulay_check(const Ideal& ideal);

}  // namespace reslift
