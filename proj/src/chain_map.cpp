#include "reslift/chain_map.hpp"

#include <algorithm>

#include "reslift/errors.hpp"
#include "reslift/module.hpp"

namespace reslift {

namespace {

void check_block_shapes(const Complex& source, const Complex& target, const ChainMap& a) {
  const int m = std::min(source.length(), target.length());
  if (static_cast<int>(a.blocks.size()) != m + 1)
    throw DomainError("chain map has the wrong number of blocks");
  for (int k = 0; k <= m; ++k) {
    const PolyMatrix& blk = a.blocks[k];
    require_same_ring(target.ring(), blk.ring());
    if (blk.rows() != target.rank(k) || blk.cols() != source.rank(k))
      throw DomainError("chain map block " + std::to_string(k) + " has the wrong shape");
  }
}

}  // namespace

ChainMapCheck validate_chain_map(const Complex& source, const Complex& target,
                                 const ChainMap& a) {
  require_same_ring(source.ring(), target.ring());
  check_block_shapes(source, target, a);
  const int m = std::min(source.length(), target.length());
  ChainMapCheck check;
  check.valid = true;
  for (int k = 1; k <= m; ++k) {
    PolyMatrix r = target.map(k) * a.blocks[k] - a.blocks[k - 1] * source.map(k);
    if (!r.is_zero()) check.valid = false;
    check.residuals.push_back(std::move(r));
  }
  if (source.length() > target.length()) {
    PolyMatrix r = a.blocks[m] * source.map(m + 1);
    if (!r.is_zero()) check.valid = false;
    check.residuals.push_back(std::move(r));
  }
  return check;
}

ChainMap lift_morphism(const Complex& source, const Complex& target, const PolyMatrix& a0,
                       ModulePosition pos) {
  require_same_ring(source.ring(), target.ring());
  if (a0.rows() != target.rank(0) || a0.cols() != source.rank(0))
    throw DomainError("degree-zero block has the wrong shape");
  const int m = std::min(source.length(), target.length());
  ChainMap a;
  a.blocks.push_back(a0);
  for (int k = 1; k <= m; ++k)
    a.blocks.push_back(lift_through(target.map(k), a.blocks[k - 1] * source.map(k), pos));
  if (source.length() > target.length() && !(a.blocks[m] * source.map(m + 1)).is_zero())
    throw LiftError("chain map does not vanish beyond the length of the target", -1);
  if (!validate_chain_map(source, target, a).valid)
    throw InternalError("lifted blocks do not satisfy the chain-map identities");
  return a;
}

Homotopy homotopy_between(const Complex& source, const Complex& target, const ChainMap& a,
                          const ChainMap& b) {
  require_same_ring(source.ring(), target.ring());
  check_block_shapes(source, target, a);
  check_block_shapes(source, target, b);
  const int m = std::min(source.length(), target.length());
  Homotopy s;
  for (int k = 0; k <= m; ++k) {
    PolyMatrix rhs = a.blocks[k] - b.blocks[k];
    if (k > 0) rhs = rhs - s.blocks[k - 1] * source.map(k);
    if (k < target.length()) {
      s.blocks.push_back(lift_through(target.map(k + 1), rhs));
    } else if (!rhs.is_zero()) {
      // k = m = length of the target: there is no s_k, so the remainder
      // must already vanish.
      throw LiftError("no homotopy: residual at the top level does not vanish", -1);
    }
  }
  if (!validate_homotopy(source, target, a, b, s))
    throw InternalError("homotopy blocks do not satisfy the homotopy identities");
  return s;
}

bool validate_homotopy(const Complex& source, const Complex& target, const ChainMap& a,
                       const ChainMap& b, const Homotopy& s) {
  require_same_ring(source.ring(), target.ring());
  check_block_shapes(source, target, a);
  check_block_shapes(source, target, b);
  const int m = std::min(source.length(), target.length());
  const int expect = m < target.length() ? m + 1 : m;
  if (static_cast<int>(s.blocks.size()) != expect) return false;
  for (int k = 0; k < expect; ++k) {
    const PolyMatrix& blk = s.blocks[k];
    if (blk.rows() != target.rank(k + 1) || blk.cols() != source.rank(k)) return false;
  }
  for (int k = 0; k <= m; ++k) {
    PolyMatrix want = a.blocks[k] - b.blocks[k];
    PolyMatrix got(target.ring(), want.rows(), want.cols());
    if (k < target.length()) got = got + target.map(k + 1) * s.blocks[k];
    if (k > 0) got = got + s.blocks[k - 1] * source.map(k);
    if (got != want) return false;
  }
  return true;
}

ChainMap det_lift_koszul(const PolyMatrix& a) {
  if (a.rows() != a.cols()) throw DomainError("determinant lift needs a square matrix");
  const int p = a.rows();
  if (p < 1) throw DomainError("determinant lift of an empty matrix");
  const RingPtr& ring = a.ring();
  ChainMap out;
  out.blocks.push_back(PolyMatrix::identity(ring, 1));
  for (int k = 1; k <= p; ++k) {
    auto sets = index_subsets(p, k);
    PolyMatrix blk(ring, static_cast<int>(sets.size()), static_cast<int>(sets.size()));
    for (size_t i = 0; i < sets.size(); ++i)
      for (size_t j = 0; j < sets.size(); ++j)
        blk.at(static_cast<int>(i), static_cast<int>(j)) = a.minor_det(sets[i], sets[j]);
    out.blocks.push_back(std::move(blk));
  }
  return out;
}

}  // namespace reslift
