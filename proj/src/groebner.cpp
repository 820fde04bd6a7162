#include "reslift/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "reslift/errors.hpp"

namespace reslift {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
  if (!ring_) throw DomainError("null ring");
  for (Polynomial& g : gens) {
    require_same_ring(ring_, g.ring());
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

Division normal_form(const Polynomial& p, const std::vector<Polynomial>& gens) {
  const RingPtr& ring = p.ring();
  for (const Polynomial& g : gens) require_same_ring(ring, g.ring());
  Division out{Polynomial::zero(ring), std::vector<Polynomial>(gens.size(), Polynomial::zero(ring))};
  Polynomial f = p;
  while (!f.is_zero()) {
    const Monomial& lm = f.leading_monomial();
    const Rational& lc = f.leading_coefficient();
    int hit = -1;
    for (size_t i = 0; i < gens.size(); ++i) {
      if (!gens[i].is_zero() && gens[i].leading_monomial().divides(lm)) {
        hit = static_cast<int>(i);
        break;
      }
    }
    if (hit >= 0) {
      const Polynomial& g = gens[hit];
      Monomial m = lm.div(g.leading_monomial());
      Rational c = lc / g.leading_coefficient();
      out.quotients[hit] += Polynomial::term(ring, m, c);
      f -= g.times_term(m, c);
    } else {
      Polynomial lt = Polynomial::term(ring, lm, lc);
      out.remainder += lt;
      f -= lt;
    }
  }
  return out;
}

namespace {

struct BasisEntry {
  Polynomial p;                     // monic
  std::vector<Polynomial> rep;      // p = sum rep[i] * generators[i]
};

// (lcm total degree, i, j): the normal selection strategy.
using PairKey = std::tuple<int, int, int>;

PairKey pair_key(const std::vector<BasisEntry>& basis, int i, int j) {
  Monomial l = basis[i].p.leading_monomial().lcm(basis[j].p.leading_monomial());
  return {l.total_degree(), i, j};
}

void make_monic(const RingPtr& ring, Polynomial& p, std::vector<Polynomial>& rep) {
  Rational inv = p.leading_coefficient().inverse();
  p = p.scaled(inv);
  for (Polynomial& r : rep) r = r.scaled(inv);
  (void)ring;
}

// Full reduction of (p, rep) against the basis, maintaining the
// representation in terms of the original generators.
Polynomial reduce_tracked(const RingPtr& ring, Polynomial p,
                          std::vector<Polynomial>& rep,
                          const std::vector<BasisEntry>& basis,
                          int skip = -1) {
  Polynomial out = Polynomial::zero(ring);
  while (!p.is_zero()) {
    const Monomial& lm = p.leading_monomial();
    int hit = -1;
    for (size_t k = 0; k < basis.size(); ++k) {
      if (static_cast<int>(k) == skip) continue;
      if (basis[k].p.leading_monomial().divides(lm)) {
        hit = static_cast<int>(k);
        break;
      }
    }
    if (hit < 0) {
      Polynomial lt = Polynomial::term(ring, lm, p.leading_coefficient());
      out += lt;
      p -= lt;
      continue;
    }
    Monomial m = lm.div(basis[hit].p.leading_monomial());
    Rational c = p.leading_coefficient() / basis[hit].p.leading_coefficient();
    p -= basis[hit].p.times_term(m, c);
    for (size_t i = 0; i < rep.size(); ++i)
      rep[i] -= basis[hit].rep[i].times_term(m, c);
  }
  return out;
}

}  // namespace

GroebnerBasis buchberger(const Ideal& ideal, bool use_pair_criteria) {
  const RingPtr& ring = ideal.ring();
  const std::vector<Polynomial>& gens = ideal.generators();
  const size_t s = gens.size();

  std::vector<BasisEntry> basis;
  std::set<PairKey> queue;
  std::set<std::pair<int, int>> handled;  // processed or skipped pairs

  auto add_element = [&](Polynomial p, std::vector<Polynomial> rep) {
    make_monic(ring, p, rep);
    int t = static_cast<int>(basis.size());
    basis.push_back({std::move(p), std::move(rep)});
    for (int i = 0; i < t; ++i) queue.insert(pair_key(basis, i, t));
  };

  for (size_t j = 0; j < s; ++j) {
    std::vector<Polynomial> rep(s, Polynomial::zero(ring));
    rep[j] = Polynomial::constant(ring, Rational(1));
    // Reduce each incoming generator so the starting basis has distinct
    // leading monomials; redundant generators contribute nothing.
    Polynomial r = reduce_tracked(ring, gens[j], rep, basis);
    if (!r.is_zero()) add_element(std::move(r), std::move(rep));
  }

  auto chain_skippable = [&](int i, int j, const Monomial& lcm_ij) {
    for (size_t k = 0; k < basis.size(); ++k) {
      int ki = static_cast<int>(k);
      if (ki == i || ki == j) continue;
      if (!basis[k].p.leading_monomial().divides(lcm_ij)) continue;
      auto key = [&](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      if (handled.count(key(i, ki)) && handled.count(key(j, ki))) return true;
    }
    return false;
  };

  while (!queue.empty()) {
    auto [deg, i, j] = *queue.begin();
    queue.erase(queue.begin());
    (void)deg;
    handled.insert({i, j});
    const Monomial& mi = basis[i].p.leading_monomial();
    const Monomial& mj = basis[j].p.leading_monomial();
    Monomial lcm = mi.lcm(mj);
    if (use_pair_criteria) {
      if (mi.coprime(mj)) continue;                 // product criterion
      if (chain_skippable(i, j, lcm)) continue;     // chain criterion
    }
    Monomial ui = lcm.div(mi), uj = lcm.div(mj);
    Polynomial sp = basis[i].p.times_term(ui, Rational(1)) -
                    basis[j].p.times_term(uj, Rational(1));
    std::vector<Polynomial> rep(s, Polynomial::zero(ring));
    for (size_t g = 0; g < s; ++g)
      rep[g] = basis[i].rep[g].times_term(ui, Rational(1)) -
               basis[j].rep[g].times_term(uj, Rational(1));
    Polynomial r = reduce_tracked(ring, std::move(sp), rep, basis);
    if (!r.is_zero()) add_element(std::move(r), std::move(rep));
  }

  // Minimalize: drop elements whose leading monomial another element divides.
  std::vector<bool> keep(basis.size(), true);
  for (size_t i = 0; i < basis.size(); ++i) {
    for (size_t j = 0; j < basis.size(); ++j) {
      if (i == j || !keep[j]) continue;
      const Monomial& mi = basis[i].p.leading_monomial();
      const Monomial& mj = basis[j].p.leading_monomial();
      if (mj.divides(mi) && mi != mj) {
        keep[i] = false;
        break;
      }
      // Equal leading monomials cannot occur: new elements are fully reduced.
    }
  }
  std::vector<BasisEntry> kept;
  for (size_t i = 0; i < basis.size(); ++i)
    if (keep[i]) kept.push_back(std::move(basis[i]));

  // Inter-reduce tails until stable.
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < kept.size(); ++i) {
      Polynomial before = kept[i].p;
      Polynomial r = reduce_tracked(ring, kept[i].p, kept[i].rep, kept, static_cast<int>(i));
      if (r != before) changed = true;
      kept[i].p = std::move(r);
    }
  }

  std::sort(kept.begin(), kept.end(), [&](const BasisEntry& a, const BasisEntry& b) {
    return ring->order().greater(a.p.leading_monomial(), b.p.leading_monomial());
  });

  GroebnerBasis gb;
  gb.ring = ring;
  gb.to_basis.assign(s, std::vector<Polynomial>(kept.size(), Polynomial::zero(ring)));
  for (size_t k = 0; k < kept.size(); ++k) {
    gb.elements.push_back(kept[k].p);
    for (size_t g = 0; g < s; ++g) gb.to_basis[g][k] = kept[k].rep[g];
  }
  gb.from_basis.assign(kept.size(), std::vector<Polynomial>(s, Polynomial::zero(ring)));
  for (size_t g = 0; g < s; ++g) {
    Division d = normal_form(gens[g], gb.elements);
    if (!d.remainder.is_zero())
      throw InternalError("generator does not reduce to zero against its own basis");
    for (size_t k = 0; k < kept.size(); ++k) gb.from_basis[k][g] = d.quotients[k];
  }
  return gb;
}

Membership ideal_membership(const Polynomial& p, const Ideal& ideal) {
  require_same_ring(p.ring(), ideal.ring());
  GroebnerBasis gb = buchberger(ideal);
  Division d = normal_form(p, gb.elements);
  Membership out;
  out.member = d.remainder.is_zero();
  const size_t s = ideal.generators().size();
  out.certificate.assign(s, Polynomial::zero(ideal.ring()));
  if (!out.member) return out;
  for (size_t g = 0; g < s; ++g)
    for (size_t k = 0; k < gb.elements.size(); ++k)
      out.certificate[g] += gb.to_basis[g][k] * d.quotients[k];
  // The certificate must reproduce p exactly.
  Polynomial check = Polynomial::zero(ideal.ring());
  for (size_t g = 0; g < s; ++g) check += out.certificate[g] * ideal.generators()[g];
  if (check != p) throw InternalError("membership certificate does not reproduce the input");
  return out;
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  GroebnerBasis ga = buchberger(a);
  GroebnerBasis gb = buchberger(b);
  return ga.elements == gb.elements;
}

bool congruent_mod(const Polynomial& p, const Polynomial& q, const Ideal& ideal) {
  return ideal_membership(p - q, ideal).member;
}

int dimension(const Ideal& ideal) {
  const RingPtr& ring = ideal.ring();
  const int n = ring->nvars();
  GroebnerBasis gb = buchberger(ideal);
  if (gb.elements.empty()) return n;  // zero ideal

  // Minimal monomial generators of the initial ideal.
  std::vector<Monomial> lms;
  for (const Polynomial& g : gb.elements) lms.push_back(g.leading_monomial());
  std::vector<Monomial> min_gens;
  for (size_t i = 0; i < lms.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < lms.size(); ++j)
      if (i != j && lms[j].divides(lms[i]) && lms[i] != lms[j]) redundant = true;
    if (!redundant) min_gens.push_back(lms[i]);
  }

  // Largest variable subset S such that every generator uses a variable
  // outside S.  2^n scan; n stays small in this engine's domain.
  if (n > 24) throw DomainError("dimension: too many variables for subset scan");
  int best = -1;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (const Monomial& m : min_gens) {
      bool has_outside = false;
      for (int v = 0; v < n && !has_outside; ++v)
        if (m[v] > 0 && !(mask & (1u << v))) has_outside = true;
      if (!has_outside) {
        ok = false;
        break;
      }
    }
    if (ok) best = std::max(best, __builtin_popcount(mask));
  }
  return best;  // -1 iff the unit ideal (some generator is the monomial 1)
}

std::optional<int> codimension(const Ideal& ideal) {
  int d = dimension(ideal);
  if (d < 0) return std::nullopt;  // unit ideal: +infinity
  return ideal.ring()->nvars() - d;
}

}  // namespace reslift
