#include "reslift/module.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "reslift/errors.hpp"

namespace reslift {

VecPoly vec_zero(const RingPtr& ring, int rank) {
  return VecPoly(static_cast<size_t>(rank), Polynomial::zero(ring));
}

bool vec_is_zero(const VecPoly& v) {
  for (const Polynomial& p : v)
    if (!p.is_zero()) return false;
  return true;
}

VecPoly vec_add(const VecPoly& a, const VecPoly& b) {
  if (a.size() != b.size()) throw DomainError("module rank mismatch");
  VecPoly out = a;
  for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

VecPoly vec_sub(const VecPoly& a, const VecPoly& b) {
  if (a.size() != b.size()) throw DomainError("module rank mismatch");
  VecPoly out = a;
  for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return out;
}

VecPoly vec_scaled(const VecPoly& v, const Rational& c) {
  VecPoly out = v;
  for (Polynomial& p : out) p = p.scaled(c);
  return out;
}

VecPoly vec_times_term(const VecPoly& v, const Monomial& m, const Rational& c) {
  VecPoly out = v;
  for (Polynomial& p : out) p = p.times_term(m, c);
  return out;
}

int module_term_compare(const MonomialOrder& ord, ModulePosition pos, int comp_a,
                        const Monomial& mono_a, int comp_b, const Monomial& mono_b) {
  if (pos == ModulePosition::PositionOverTerm) {
    if (comp_a != comp_b) return comp_a > comp_b ? 1 : -1;
    return ord.compare(mono_a, mono_b);
  }
  int c = ord.compare(mono_a, mono_b);
  if (c != 0) return c;
  if (comp_a != comp_b) return comp_a > comp_b ? 1 : -1;
  return 0;
}

ModLead module_lead(const VecPoly& v, const MonomialOrder& ord, ModulePosition pos) {
  int best = -1;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    const Monomial& m = v[i].leading_monomial();
    if (best < 0 || module_term_compare(ord, pos, static_cast<int>(i), m, best,
                                        v[best].leading_monomial()) > 0)
      best = static_cast<int>(i);
  }
  if (best < 0) throw DomainError("leading term of the zero vector");
  return {best, v[best].leading_monomial(), v[best].leading_coefficient()};
}

ModuleDivision module_normal_form(const VecPoly& v, const std::vector<VecPoly>& gens,
                                  const MonomialOrder& ord, ModulePosition pos) {
  if (v.empty()) return {v, {}};  // rank zero: no terms, no quotients
  const RingPtr& ring = v[0].ring();
  ModuleDivision out{vec_zero(ring, static_cast<int>(v.size())),
                     std::vector<Polynomial>(gens.size(), Polynomial::zero(ring))};
  VecPoly f = v;
  while (!vec_is_zero(f)) {
    ModLead lf = module_lead(f, ord, pos);
    int hit = -1;
    for (size_t k = 0; k < gens.size(); ++k) {
      if (vec_is_zero(gens[k])) continue;
      ModLead lg = module_lead(gens[k], ord, pos);
      if (lg.comp == lf.comp && lg.mono.divides(lf.mono)) {
        hit = static_cast<int>(k);
        break;
      }
    }
    if (hit < 0) {
      Polynomial lt = Polynomial::term(ring, lf.mono, lf.coef);
      out.remainder[lf.comp] += lt;
      f[lf.comp] -= lt;
      continue;
    }
    ModLead lg = module_lead(gens[hit], ord, pos);
    Monomial m = lf.mono.div(lg.mono);
    Rational c = lf.coef / lg.coef;
    out.quotients[hit] += Polynomial::term(ring, m, c);
    f = vec_sub(f, vec_times_term(gens[hit], m, c));
  }
  return out;
}

namespace {

struct ModEntry {
  VecPoly v;                    // monic on its leading term
  std::vector<Polynomial> rep;  // v = sum rep[i] * gens[i]
  ModLead lead;
};

using PairKey = std::tuple<int, int, int>;  // (lcm degree, i, j)

struct RunResult {
  std::vector<ModEntry> basis;
  std::vector<VecPoly> zero_reductions;  // reps (in O^s) of reductions to zero
};

// Buchberger over a submodule of O^rank with representation tracking.
// With collect_zero set, every reduction to zero is recorded; callers that
// want full syzygy generation must also disable the pair criteria.
RunResult run_buchberger(const RingPtr& ring, int rank, const std::vector<VecPoly>& gens,
                         ModulePosition pos, bool use_criteria, bool collect_zero) {
  const MonomialOrder& ord = ring->order();
  const size_t s = gens.size();
  RunResult run;
  std::set<PairKey> queue;
  std::set<std::pair<int, int>> handled;

  auto reduce_tracked = [&](VecPoly f, std::vector<Polynomial>& rep) {
    VecPoly out = vec_zero(ring, rank);
    while (!vec_is_zero(f)) {
      ModLead lf = module_lead(f, ord, pos);
      int hit = -1;
      for (size_t k = 0; k < run.basis.size(); ++k) {
        const ModLead& lg = run.basis[k].lead;
        if (lg.comp == lf.comp && lg.mono.divides(lf.mono)) {
          hit = static_cast<int>(k);
          break;
        }
      }
      if (hit < 0) {
        Polynomial lt = Polynomial::term(ring, lf.mono, lf.coef);
        out[lf.comp] += lt;
        f[lf.comp] -= lt;
        continue;
      }
      const ModEntry& e = run.basis[hit];
      Monomial m = lf.mono.div(e.lead.mono);
      Rational c = lf.coef / e.lead.coef;
      f = vec_sub(f, vec_times_term(e.v, m, c));
      for (size_t i = 0; i < rep.size(); ++i) rep[i] -= e.rep[i].times_term(m, c);
    }
    return out;
  };

  auto add_element = [&](VecPoly v, std::vector<Polynomial> rep) {
    ModLead lead = module_lead(v, ord, pos);
    Rational inv = lead.coef.inverse();
    v = vec_scaled(v, inv);
    for (Polynomial& r : rep) r = r.scaled(inv);
    lead.coef = Rational(1);
    int t = static_cast<int>(run.basis.size());
    run.basis.push_back({std::move(v), std::move(rep), lead});
    for (int i = 0; i < t; ++i) {
      if (run.basis[i].lead.comp != lead.comp) continue;
      Monomial l = run.basis[i].lead.mono.lcm(lead.mono);
      queue.insert({l.total_degree(), i, t});
    }
  };

  for (size_t j = 0; j < s; ++j) {
    std::vector<Polynomial> rep(s, Polynomial::zero(ring));
    rep[j] = Polynomial::constant(ring, Rational(1));
    if (vec_is_zero(gens[j])) continue;  // the division pass recovers e_j
    VecPoly r = reduce_tracked(gens[j], rep);
    if (vec_is_zero(r)) {
      if (collect_zero && !vec_is_zero(rep)) run.zero_reductions.push_back(rep);
      continue;
    }
    add_element(std::move(r), std::move(rep));
  }

  auto chain_skippable = [&](int i, int j, const Monomial& lcm_ij, int comp) {
    for (size_t k = 0; k < run.basis.size(); ++k) {
      int ki = static_cast<int>(k);
      if (ki == i || ki == j) continue;
      if (run.basis[k].lead.comp != comp) continue;
      if (!run.basis[k].lead.mono.divides(lcm_ij)) continue;
      auto key = [](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      if (handled.count(key(i, ki)) && handled.count(key(j, ki))) return true;
    }
    return false;
  };

  while (!queue.empty()) {
    auto [deg, i, j] = *queue.begin();
    queue.erase(queue.begin());
    (void)deg;
    handled.insert({i, j});
    const ModLead& li = run.basis[i].lead;
    const ModLead& lj = run.basis[j].lead;
    Monomial lcm = li.mono.lcm(lj.mono);
    if (use_criteria) {
      // The product criterion is only sound in rank one; the chain
      // criterion restricted to same-component triples is sound in general.
      if (rank == 1 && li.mono.coprime(lj.mono)) continue;
      if (chain_skippable(i, j, lcm, li.comp)) continue;
    }
    Monomial ui = lcm.div(li.mono), uj = lcm.div(lj.mono);
    VecPoly sp = vec_sub(vec_times_term(run.basis[i].v, ui, Rational(1)),
                         vec_times_term(run.basis[j].v, uj, Rational(1)));
    std::vector<Polynomial> rep(s, Polynomial::zero(ring));
    for (size_t g = 0; g < s; ++g)
      rep[g] = run.basis[i].rep[g].times_term(ui, Rational(1)) -
               run.basis[j].rep[g].times_term(uj, Rational(1));
    VecPoly r = reduce_tracked(std::move(sp), rep);
    if (vec_is_zero(r)) {
      if (collect_zero && !vec_is_zero(rep)) run.zero_reductions.push_back(rep);
      continue;
    }
    add_element(std::move(r), std::move(rep));
  }
  return run;
}

}  // namespace

ModuleGB module_groebner(const RingPtr& ring, int rank, const std::vector<VecPoly>& gens,
                         ModulePosition pos, bool use_criteria) {
  for (const VecPoly& g : gens) {
    if (static_cast<int>(g.size()) != rank) throw DomainError("module rank mismatch");
    for (const Polynomial& p : g) require_same_ring(ring, p.ring());
  }
  const MonomialOrder& ord = ring->order();
  RunResult run = run_buchberger(ring, rank, gens, pos, use_criteria, false);

  // Minimalize: drop entries whose lead another entry's lead strictly divides.
  std::vector<bool> keep(run.basis.size(), true);
  for (size_t i = 0; i < run.basis.size(); ++i) {
    for (size_t j = 0; j < run.basis.size(); ++j) {
      if (i == j) continue;
      const ModLead& a = run.basis[i].lead;
      const ModLead& b = run.basis[j].lead;
      if (b.comp == a.comp && b.mono.divides(a.mono) && a.mono != b.mono) {
        keep[i] = false;
        break;
      }
    }
  }
  std::vector<ModEntry> kept;
  for (size_t i = 0; i < run.basis.size(); ++i)
    if (keep[i]) kept.push_back(std::move(run.basis[i]));

  // Inter-reduce tails until stable.
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < kept.size(); ++i) {
      std::vector<VecPoly> others;
      for (size_t j = 0; j < kept.size(); ++j)
        if (j != i) others.push_back(kept[j].v);
      ModuleDivision d = module_normal_form(kept[i].v, others, ord, pos);
      if (d.remainder != kept[i].v) {
        changed = true;
        size_t oi = 0;
        for (size_t j = 0; j < kept.size(); ++j) {
          if (j == i) continue;
          if (!d.quotients[oi].is_zero())
            for (size_t g = 0; g < kept[i].rep.size(); ++g)
              kept[i].rep[g] -= d.quotients[oi] * kept[j].rep[g];
          ++oi;
        }
        kept[i].v = std::move(d.remainder);
        kept[i].lead = module_lead(kept[i].v, ord, pos);
      }
    }
  }

  std::sort(kept.begin(), kept.end(), [&](const ModEntry& a, const ModEntry& b) {
    return module_term_compare(ord, pos, a.lead.comp, a.lead.mono, b.lead.comp, b.lead.mono) > 0;
  });

  ModuleGB gb;
  gb.ring = ring;
  gb.rank = rank;
  const size_t s = gens.size();
  gb.to_basis.assign(s, std::vector<Polynomial>(kept.size(), Polynomial::zero(ring)));
  for (size_t k = 0; k < kept.size(); ++k) {
    gb.elements.push_back(kept[k].v);
    for (size_t g = 0; g < s; ++g) gb.to_basis[g][k] = kept[k].rep[g];
  }
  gb.from_basis.assign(kept.size(), std::vector<Polynomial>(s, Polynomial::zero(ring)));
  for (size_t g = 0; g < s; ++g) {
    ModuleDivision d = module_normal_form(gens[g], gb.elements, ord, pos);
    if (!vec_is_zero(d.remainder))
      throw InternalError("generator does not reduce to zero against its own basis");
    for (size_t k = 0; k < kept.size(); ++k) gb.from_basis[k][g] = d.quotients[k];
  }
  return gb;
}

PolyMatrix syzygies(const PolyMatrix& a, ModulePosition pos) {
  const RingPtr& ring = a.ring();
  const MonomialOrder& ord = ring->order();
  const int s = a.cols();
  std::vector<VecPoly> gens;
  for (int j = 0; j < s; ++j) gens.push_back(a.column(j));

  // Full pair processing (no criteria) so the zero reductions, together
  // with the division relations below, generate every syzygy.
  RunResult run = run_buchberger(ring, a.rows(), gens, pos, false, true);
  std::vector<VecPoly> syz = run.zero_reductions;

  std::vector<VecPoly> basis;
  for (const ModEntry& e : run.basis) basis.push_back(e.v);
  for (int j = 0; j < s; ++j) {
    ModuleDivision d = module_normal_form(gens[j], basis, ord, pos);
    if (!vec_is_zero(d.remainder))
      throw InternalError("generator does not reduce to zero against its own basis");
    VecPoly sig = vec_zero(ring, s);
    sig[j] = Polynomial::constant(ring, Rational(1));
    for (size_t k = 0; k < basis.size(); ++k)
      for (size_t g = 0; g < run.basis[k].rep.size(); ++g)
        sig[g] -= d.quotients[k] * run.basis[k].rep[g];
    if (!vec_is_zero(sig)) syz.push_back(std::move(sig));
  }

  // Canonicalize: inter-reduce to a fixpoint, drop zeros, make monic,
  // dedupe, sort by leading term, descending.
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < syz.size(); ++i) {
      if (vec_is_zero(syz[i])) continue;
      std::vector<VecPoly> others;
      for (size_t j = 0; j < syz.size(); ++j)
        if (j != i && !vec_is_zero(syz[j])) others.push_back(syz[j]);
      VecPoly r = module_normal_form(syz[i], others, ord, pos).remainder;
      if (r != syz[i]) {
        changed = true;
        syz[i] = std::move(r);
      }
    }
  }
  std::vector<VecPoly> out;
  for (VecPoly& v : syz) {
    if (vec_is_zero(v)) continue;
    ModLead l = module_lead(v, ord, pos);
    out.push_back(vec_scaled(v, l.coef.inverse()));
  }
  std::sort(out.begin(), out.end(), [&](const VecPoly& x, const VecPoly& y) {
    ModLead lx = module_lead(x, ord, pos);
    ModLead ly = module_lead(y, ord, pos);
    int c = module_term_compare(ord, pos, lx.comp, lx.mono, ly.comp, ly.mono);
    if (c != 0) return c > 0;
    return false;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());

  PolyMatrix result(ring, s, static_cast<int>(out.size()));
  for (size_t j = 0; j < out.size(); ++j) result.set_column(static_cast<int>(j), out[j]);
  if (!(a * result).is_zero()) throw InternalError("syzygy columns do not annihilate the matrix");
  return result;
}

PolyMatrix lift_through(const PolyMatrix& a, const PolyMatrix& b, ModulePosition pos) {
  require_same_ring(a.ring(), b.ring());
  if (a.rows() != b.rows()) throw DomainError("matrix shape mismatch in lift");
  const RingPtr& ring = a.ring();
  const MonomialOrder& ord = ring->order();
  std::vector<VecPoly> gens;
  for (int j = 0; j < a.cols(); ++j) gens.push_back(a.column(j));
  ModuleGB gb = module_groebner(ring, a.rows(), gens, pos);

  PolyMatrix x(ring, a.cols(), b.cols());
  for (int j = 0; j < b.cols(); ++j) {
    ModuleDivision d = module_normal_form(b.column(j), gb.elements, ord, pos);
    if (!vec_is_zero(d.remainder))
      throw LiftError("no preimage for column " + std::to_string(j), j);
    for (int g = 0; g < a.cols(); ++g) {
      Polynomial acc = Polynomial::zero(ring);
      for (size_t k = 0; k < gb.elements.size(); ++k) acc += gb.to_basis[g][k] * d.quotients[k];
      x.at(g, j) = std::move(acc);
    }
  }
  if (a * x != b) throw InternalError("lift does not reproduce the target");
  return x;
}

}  // namespace reslift
