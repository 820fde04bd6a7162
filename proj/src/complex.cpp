#include "reslift/complex.hpp"

#include <algorithm>

#include "reslift/errors.hpp"
#include "reslift/module.hpp"

namespace reslift {

Complex::Complex(RingPtr ring, std::vector<PolyMatrix> maps)
    : ring_(std::move(ring)), maps_(std::move(maps)) {
  if (!ring_) throw DomainError("null ring");
  if (maps_.empty()) throw DomainError("complex with no maps");
  for (const PolyMatrix& m : maps_) {
    require_same_ring(ring_, m.ring());
    if (m.rows() <= 0 || m.cols() <= 0) throw DomainError("zero-rank module in complex");
  }
  for (size_t k = 0; k + 1 < maps_.size(); ++k) {
    if (maps_[k].cols() != maps_[k + 1].rows())
      throw DomainError("adjacent maps have mismatched shapes");
    if (!(maps_[k] * maps_[k + 1]).is_zero())
      throw DomainError("maps do not compose to zero");
  }
}

int Complex::rank(int k) const {
  if (k < 0 || k > length()) throw DomainError("module index out of range");
  return k == 0 ? maps_[0].rows() : maps_[k - 1].cols();
}

std::vector<int> Complex::ranks() const {
  std::vector<int> out;
  for (int k = 0; k <= length(); ++k) out.push_back(rank(k));
  return out;
}

const PolyMatrix& Complex::map(int k) const {
  if (k < 1 || k > length()) throw DomainError("map index out of range");
  return maps_[k - 1];
}

Complex koszul(const RingPtr& ring, const std::vector<Polynomial>& f) {
  const int p = static_cast<int>(f.size());
  if (p < 1) throw DomainError("koszul complex of an empty tuple");
  for (const Polynomial& g : f) require_same_ring(ring, g.ring());

  std::vector<PolyMatrix> maps;
  for (int k = 1; k <= p; ++k) {
    auto rows_sets = index_subsets(p, k - 1);
    auto cols_sets = index_subsets(p, k);
    // Positions of the (k-1)-subsets for row lookup.
    auto find_row = [&](const std::vector<int>& s) {
      auto it = std::lower_bound(rows_sets.begin(), rows_sets.end(), s);
      return static_cast<int>(it - rows_sets.begin());
    };
    PolyMatrix m(ring, static_cast<int>(rows_sets.size()), static_cast<int>(cols_sets.size()));
    for (size_t cj = 0; cj < cols_sets.size(); ++cj) {
      const std::vector<int>& idx = cols_sets[cj];
      for (int j = 0; j < k; ++j) {
        std::vector<int> rest;
        for (int t = 0; t < k; ++t)
          if (t != j) rest.push_back(idx[t]);
        Polynomial entry = j % 2 == 0 ? f[idx[j]] : -f[idx[j]];
        m.at(find_row(rest), static_cast<int>(cj)) += entry;
      }
    }
    maps.push_back(std::move(m));
  }
  return Complex(ring, std::move(maps));
}

namespace {

// True when the entry is a nonzero constant polynomial.
bool is_unit_constant(const Polynomial& p) {
  return !p.is_zero() && p.total_degree() == 0;
}

// Eliminate one unit-constant pivot of maps[k-1] (k >= 2), adjusting the
// neighbouring maps; returns false when the map has no such pivot.
bool prune_one_pivot(std::vector<PolyMatrix>& maps, int k) {
  PolyMatrix& a = maps[k - 1];
  int pi = -1, pj = -1;
  for (int j = 0; j < a.cols() && pi < 0; ++j)
    for (int i = 0; i < a.rows() && pi < 0; ++i)
      if (is_unit_constant(a.at(i, j))) {
        pi = i;
        pj = j;
      }
  if (pi < 0) return false;
  Rational c = a.at(pi, pj).leading_coefficient();
  Rational cinv = c.inverse();

  // Clear the pivot row by column operations, mirrored as row operations
  // on the following map.
  for (int j = 0; j < a.cols(); ++j) {
    if (j == pj) continue;
    Polynomial t = a.at(pi, j);
    if (t.is_zero()) continue;
    Polynomial factor = t.scaled(cinv);
    for (int r = 0; r < a.rows(); ++r) a.at(r, j) -= factor * a.at(r, pj);
    if (k < static_cast<int>(maps.size())) {
      PolyMatrix& next = maps[k];
      for (int cc = 0; cc < next.cols(); ++cc) next.at(pj, cc) += factor * next.at(j, cc);
    }
  }
  // Clear the pivot column by row operations, mirrored as column
  // operations on the preceding map.
  for (int i = 0; i < a.rows(); ++i) {
    if (i == pi) continue;
    Polynomial u = a.at(i, pj);
    if (u.is_zero()) continue;
    Polynomial factor = u.scaled(cinv);
    for (int cc = 0; cc < a.cols(); ++cc) a.at(i, cc) -= factor * a.at(pi, cc);
    PolyMatrix& prev = maps[k - 2];
    for (int r = 0; r < prev.rows(); ++r) prev.at(r, pi) += factor * prev.at(r, i);
  }

  // The complex property forces the mirrored row and column to vanish.
  PolyMatrix& prev = maps[k - 2];
  for (int r = 0; r < prev.rows(); ++r)
    if (!prev.at(r, pi).is_zero())
      throw InternalError("pivot column of the preceding map did not vanish");
  if (k < static_cast<int>(maps.size())) {
    PolyMatrix& next = maps[k];
    for (int cc = 0; cc < next.cols(); ++cc)
      if (!next.at(pj, cc).is_zero())
        throw InternalError("pivot row of the following map did not vanish");
    maps[k] = next.without_row(pj);
  }
  maps[k - 1] = a.without_row(pi).without_col(pj);
  maps[k - 2] = prev.without_col(pi);
  return true;
}

// Full pruning pass over maps k >= 2 until no unit-constant pivot remains,
// then drop empty tail maps.
void prune_all(std::vector<PolyMatrix>& maps) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int k = 2; k <= static_cast<int>(maps.size()); ++k)
      while (maps[k - 1].cols() > 0 && maps[k - 1].rows() > 0 && prune_one_pivot(maps, k))
        changed = true;
  }
  while (!maps.empty() && maps.back().cols() == 0) maps.pop_back();
  for (const PolyMatrix& m : maps)
    if (m.cols() == 0 || m.rows() == 0)
      throw InternalError("pruning collapsed an interior module");
}

// Rescale columns of maps k >= 2 so each leading coefficient is 1, with
// the inverse scaling applied to the rows of the following map.
void renormalize_columns(const RingPtr& ring, std::vector<PolyMatrix>& maps) {
  const MonomialOrder& ord = ring->order();
  for (int k = 2; k <= static_cast<int>(maps.size()); ++k) {
    PolyMatrix& a = maps[k - 1];
    for (int j = 0; j < a.cols(); ++j) {
      VecPoly col = a.column(j);
      if (vec_is_zero(col)) continue;
      Rational lc = module_lead(col, ord, ModulePosition::PositionOverTerm).coef;
      if (lc == Rational(1)) continue;
      Rational inv = lc.inverse();
      for (int r = 0; r < a.rows(); ++r) a.at(r, j) = a.at(r, j).scaled(inv);
      if (k < static_cast<int>(maps.size())) {
        PolyMatrix& next = maps[k];
        for (int cc = 0; cc < next.cols(); ++cc) next.at(j, cc) = next.at(j, cc).scaled(lc);
      }
    }
  }
}

void check_local_units(const std::vector<PolyMatrix>& maps) {
  for (size_t k = 1; k < maps.size(); ++k) {
    const PolyMatrix& a = maps[k];
    for (int i = 0; i < a.rows(); ++i)
      for (int j = 0; j < a.cols(); ++j) {
        const Polynomial& p = a.at(i, j);
        if (!p.is_zero() && !p.constant_term().is_zero() && p.total_degree() > 0)
          throw MinimalizeError("not locally minimalizable over the polynomial ring");
      }
  }
}

}  // namespace

Complex free_resolution(const Ideal& ideal, int max_length) {
  const RingPtr& ring = ideal.ring();
  const std::vector<Polynomial>& gens = ideal.generators();
  if (gens.empty()) throw DomainError("resolution of the zero ideal");
  const bool user_bound = max_length >= 0;
  const int bound = user_bound ? max_length : ring->nvars();
  if (bound < 1) throw DomainError("resolution bound must be positive");

  std::vector<PolyMatrix> maps;
  PolyMatrix phi1(ring, 1, static_cast<int>(gens.size()));
  for (size_t j = 0; j < gens.size(); ++j) phi1.at(0, static_cast<int>(j)) = gens[j];
  maps.push_back(std::move(phi1));

  while (true) {
    PolyMatrix syz = syzygies(maps.back());
    if (syz.cols() == 0) break;
    maps.push_back(std::move(syz));
    // Prune the new map immediately so redundant syzygy generators cannot
    // inflate the following steps.
    int k = static_cast<int>(maps.size());
    while (maps[k - 1].cols() > 0 && prune_one_pivot(maps, k)) {
    }
    if (maps.back().cols() == 0) {
      maps.pop_back();
      break;
    }
    // Only a map that survives pruning counts against the bound: a step
    // whose syzygies are all redundant does not lengthen the resolution.
    if (static_cast<int>(maps.size()) > bound) {
      if (user_bound) throw DomainError("resolution longer than the requested bound");
      throw InternalError("resolution exceeded the variable-count bound");
    }
  }

  prune_all(maps);
  renormalize_columns(ring, maps);
  check_local_units(maps);
  return Complex(ring, std::move(maps));
}

Complex minimalized(const Complex& c) {
  std::vector<PolyMatrix> maps = c.maps();
  prune_all(maps);
  renormalize_columns(c.ring(), maps);
  check_local_units(maps);
  return Complex(c.ring(), std::move(maps));
}

std::vector<int> expected_ranks(const Complex& c) {
  const int n = c.length();
  std::vector<int> r(static_cast<size_t>(n) + 2, 0);
  for (int k = n; k >= 1; --k) r[k] = c.rank(k) - r[k + 1];
  return std::vector<int>(r.begin() + 1, r.begin() + 1 + n);
}

Ideal fitting_support(const Complex& c, int k) {
  if (k < 1 || k > c.length()) throw DomainError("map index out of range");
  const int r = expected_ranks(c)[k - 1];
  const PolyMatrix& phi = c.map(k);
  if (r == 0) return Ideal(c.ring(), {Polynomial::constant(c.ring(), Rational(1))});
  if (r < 0 || r > std::min(phi.rows(), phi.cols())) return Ideal(c.ring(), {});
  return Ideal(c.ring(), phi.minors(r));
}

ExactnessReport buchsbaum_eisenbud_exact(const Complex& c) {
  ExactnessReport report;
  report.expected = expected_ranks(c);
  report.exact = true;
  for (int k = 1; k <= c.length(); ++k) {
    Ideal fit = fitting_support(c, k);
    std::optional<int> codim = codimension(fit);
    bool ok = !codim.has_value() || *codim >= k;
    report.codims.push_back(codim);
    report.passed.push_back(ok);
    if (!ok) report.exact = false;
  }
  return report;
}

CmReport cohen_macaulay_check(const Ideal& ideal) {
  CmReport report;
  Complex res = free_resolution(ideal);
  report.length = res.length();
  report.codim = codimension(ideal);
  report.cohen_macaulay = report.codim.has_value() && *report.codim == report.length;
  return report;
}

}  // namespace reslift
