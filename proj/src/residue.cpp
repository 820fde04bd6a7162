#include "reslift/residue.hpp"

#include <string>

#include "reslift/errors.hpp"

namespace reslift {

Polynomial jacobian_det(const std::vector<Polynomial>& f) {
  if (f.empty()) throw DomainError("jacobian of an empty tuple");
  const RingPtr& ring = f[0].ring();
  for (const Polynomial& g : f) require_same_ring(ring, g.ring());
  const int n = ring->nvars();
  if (static_cast<int>(f.size()) != n)
    throw DomainError("jacobian needs as many polynomials as variables");
  PolyMatrix d(ring, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) d.at(i, j) = f[i].derivative(j);
  return d.det();
}

HickelVerdict hickel_test(const std::vector<Polynomial>& f) {
  for (const Polynomial& g : f)
    if (!g.constant_term().is_zero())
      throw DomainError("tuple must vanish at the origin");
  HickelVerdict verdict{jacobian_det(f), 0, false, {}};
  const RingPtr& ring = f[0].ring();
  const int n = ring->nvars();
  Ideal ideal(ring, f);
  Membership mem = ideal_membership(verdict.jacobian, ideal);
  verdict.member = mem.member;
  if (verdict.member) verdict.certificate = mem.certificate;
  std::optional<int> codim = codimension(ideal);
  if (!codim.has_value())
    throw InternalError("tuple vanishing at the origin generated the unit ideal");
  verdict.codim = *codim;
  if (verdict.member != (verdict.codim < n))
    throw InternalError("jacobian membership verdict contradicts the codimension criterion");
  return verdict;
}

ResidueReport transformation_report(const std::vector<Polynomial>& f, const Ideal& target,
                                    ModulePosition pos) {
  if (f.empty()) throw DomainError("empty tuple");
  const RingPtr& ring = target.ring();
  for (const Polynomial& g : f) require_same_ring(ring, g.ring());
  const int p = static_cast<int>(f.size());
  for (int i = 0; i < p; ++i) {
    if (f[i].is_zero()) throw DomainError("tuple entry " + std::to_string(i + 1) + " is zero");
    if (!ideal_membership(f[i], target).member)
      throw DomainError("tuple entry " + std::to_string(i + 1) + " is not in the target ideal");
  }
  Ideal tuple_ideal(ring, f);
  std::optional<int> tuple_codim = codimension(tuple_ideal);
  if (!tuple_codim.has_value() || *tuple_codim != p)
    throw DomainError("tuple has codimension " +
                      (tuple_codim ? std::to_string(*tuple_codim) : std::string("infinity")) +
                      ", expected " + std::to_string(p));
  std::optional<int> target_codim = codimension(target);
  if (!target_codim.has_value() || *target_codim != p)
    throw DomainError("target ideal has codimension " +
                      (target_codim ? std::to_string(*target_codim) : std::string("infinity")) +
                      ", expected " + std::to_string(p));

  Complex resolution = free_resolution(target);
  if (resolution.length() != p)
    throw DomainError("target ideal is not Cohen-Macaulay: resolution length " +
                      std::to_string(resolution.length()) + ", codimension " + std::to_string(p));

  Complex kos = koszul(ring, f);
  ChainMap lift = lift_morphism(kos, resolution, PolyMatrix::identity(ring, 1), pos);

  ResidueReport report{f, lift.blocks[p].column(0), resolution.ranks(), tuple_ideal};
  return report;
}

}  // namespace reslift
