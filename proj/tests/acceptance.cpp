// Acceptance gate: the eight criteria the engine must satisfy, one PASS/FAIL
// line each, thresholds pinned in code.  Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "reslift/chain_map.hpp"
#include "reslift/complex.hpp"
#include "reslift/groebner.hpp"
#include "reslift/parse.hpp"
#include "reslift/residue.hpp"
#include "reslift/session.hpp"
#include "test_util.hpp"

using namespace reslift;
using testutil::M;
using testutil::P;

namespace {

bool g_ok = true;
std::vector<std::string> g_notes;
std::string g_info;

#define EXPECT(cond)                                                \
  do {                                                              \
    if (!(cond)) {                                                  \
      g_ok = false;                                                 \
      g_notes.push_back(std::string("check failed: ") + #cond);     \
    }                                                               \
  } while (0)

Ideal curve_ideal(const RingPtr& r) {
  return Ideal(r, {P(r, "y^2 - x*z"), P(r, "x^3 - y*z"), P(r, "x^2*y - z^2")});
}

std::vector<Polynomial> curve_tuple(const RingPtr& r) {
  return {P(r, "z^2 - x^2*y"), P(r, "x^4 + y^3 - 2*x*y*z")};
}

ChainMap curve_hand_lift(const RingPtr& r) {
  return ChainMap{{PolyMatrix::identity(r, 1),
                   M(r, {{"0", "y"}, {"0", "x"}, {"-1", "0"}}),
                   M(r, {{"x^3 - y*z"}, {"y^2 - x*z"}})}};
}

Complex planes_hand_complex(const RingPtr& r4) {
  PolyMatrix p1 = M(r4, {{"x*z", "y*z", "x*w", "y*w"}});
  PolyMatrix p2 = M(r4, {{"-y", "0", "-w", "0"},
                         {"x", "0", "0", "-w"},
                         {"0", "-y", "z", "0"},
                         {"0", "x", "0", "z"}});
  PolyMatrix p3 = M(r4, {{"w"}, {"-z"}, {"-y"}, {"x"}});
  return Complex(r4, {p1, p2, p3});
}

bool congruent_blocks(const PolyMatrix& a, const PolyMatrix& b, const Ideal& ideal) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (!congruent_mod(a.at(i, j), b.at(i, j), ideal)) return false;
  return true;
}

// 1. Twisted-cubic-style curve: resolution ranks (1, 3, 2), both fitting
//    ideals equal the target, exactness and Cohen-Macaulay checks agree.
void criterion_curve_resolution() {
  RingPtr r = make_ring({"x", "y", "z"});
  Ideal J = curve_ideal(r);
  Complex E = free_resolution(J);
  EXPECT(E.ranks() == std::vector<int>({1, 3, 2}));
  EXPECT(ideal_equal(fitting_support(E, 1), J));
  EXPECT(ideal_equal(fitting_support(E, 2), J));
  EXPECT(buchsbaum_eisenbud_exact(E).exact);
  CmReport cm = cohen_macaulay_check(J);
  EXPECT(cm.cohen_macaulay);
  EXPECT(cm.length == 2);
  EXPECT(cm.codim.has_value() && *cm.codim == 2);
}

// 2. The hand-written lift of 1 onto the curve resolution validates; the
//    computed lift is homotopic to it; the top blocks agree mod the tuple.
void criterion_curve_lift() {
  RingPtr r = make_ring({"x", "y", "z"});
  Complex E = free_resolution(curve_ideal(r));
  Complex F = koszul(r, curve_tuple(r));
  ChainMap hand = curve_hand_lift(r);

  ChainMapCheck chk = validate_chain_map(F, E, hand);
  EXPECT(chk.valid);
  for (const PolyMatrix& res : chk.residuals) EXPECT(res.is_zero());

  ChainMap a = lift_morphism(F, E, PolyMatrix::identity(r, 1));
  Homotopy s = homotopy_between(F, E, a, hand);
  EXPECT(validate_homotopy(F, E, a, hand, s));

  Ideal tuple(r, curve_tuple(r));
  EXPECT(congruent_blocks(a.blocks[2], M(r, {{"x^3 - y*z"}, {"y^2 - x*z"}}), tuple));
}

// 3. Two skew planes: resolution ranks (1, 4, 4, 1), not Cohen-Macaulay
//    (length 3 vs codimension 2); the hand-written complex is exact and the
//    hand-written lift from the codim-2 Koszul complex validates; the
//    computed lift is homotopic to it.
void criterion_planes() {
  RingPtr r4 = make_ring({"x", "y", "z", "w"});
  Ideal J(r4, {P(r4, "x*z"), P(r4, "x*w"), P(r4, "y*z"), P(r4, "y*w")});
  Complex E = free_resolution(J);
  EXPECT(E.ranks() == std::vector<int>({1, 4, 4, 1}));
  CmReport cm = cohen_macaulay_check(J);
  EXPECT(!cm.cohen_macaulay);
  EXPECT(cm.length == 3);
  EXPECT(cm.codim.has_value() && *cm.codim == 2);

  Complex handE = planes_hand_complex(r4);
  EXPECT(buchsbaum_eisenbud_exact(handE).exact);

  Complex F = koszul(r4, {P(r4, "x*z"), P(r4, "y*w")});
  ChainMap hand{{PolyMatrix::identity(r4, 1),
                 M(r4, {{"1", "0"}, {"0", "0"}, {"0", "0"}, {"0", "1"}}),
                 M(r4, {{"1/2*w"}, {"1/2*z"}, {"1/2*y"}, {"1/2*x"}})}};
  EXPECT(validate_chain_map(F, handE, hand).valid);

  ChainMap a = lift_morphism(F, handE, PolyMatrix::identity(r4, 1));
  EXPECT(validate_chain_map(F, handE, a).valid);
  Homotopy s = homotopy_between(F, handE, a, hand);
  EXPECT(validate_homotopy(F, handE, a, hand, s));
}

// 4. Constant change of generators g -> f = g.A with A = [[1,1],[1,-1]]:
//    the determinant lift tops out at [-2] and the generic lift agrees with
//    it modulo (f).
void criterion_constant_scaling() {
  RingPtr r = make_ring({"x", "y"});
  PolyMatrix A = M(r, {{"1", "1"}, {"1", "-1"}});
  std::vector<Polynomial> g = {P(r, "x"), P(r, "y")};
  std::vector<Polynomial> f = {P(r, "x + y"), P(r, "x - y")};

  ChainMap d = det_lift_koszul(A);
  EXPECT(d.blocks[2] == M(r, {{"-2"}}));

  Complex F = koszul(r, f);
  Complex G = koszul(r, g);
  EXPECT(validate_chain_map(F, G, d).valid);

  ChainMap l = lift_morphism(F, G, PolyMatrix::identity(r, 1));
  EXPECT(congruent_mod(l.blocks[2].at(0, 0), P(r, "-2"), Ideal(r, f)));
}

// 5. Jacobian-membership dichotomy on 200 seeded two-variable tuples with
//    zero constant term and degrees <= 3: membership of the jacobian in the
//    tuple ideal must equal (codimension < 2) on every tuple, with a valid
//    certificate on the membership side, all within 60 seconds.
void criterion_jacobian_dichotomy() {
  constexpr int kCount = 200;
  constexpr double kBudgetSeconds = 60.0;
  auto corpus = testutil::hickel_corpus(kCount);
  auto start = std::chrono::steady_clock::now();
  int agreed = 0;
  for (const std::vector<Polynomial>& f : corpus) {
    HickelVerdict v = hickel_test(f);
    std::optional<int> cod = codimension(Ideal(f[0].ring(), f));
    bool expect_member = cod.has_value() && *cod < 2;
    if (v.member == expect_member) ++agreed;
    if (v.member) {
      Polynomial recon = Polynomial::zero(f[0].ring());
      for (size_t i = 0; i < f.size(); ++i) recon += v.certificate[i] * f[i];
      EXPECT(recon == v.jacobian);
    }
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  EXPECT(agreed == kCount);
  EXPECT(secs < kBudgetSeconds);
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%d/%d in %.2f s", agreed, kCount, secs);
  g_info = buf;
}

// 6. Independent oracles: Groebner ideal membership agrees with the exact
//    Macaulay-matrix span oracle on 100 seeded pairs (degree bound 6), and
//    syzygies are sound and complete against degree-truncated kernels on 50
//    seeded matrices.
void criterion_oracles() {
  constexpr int kPairs = 100;
  constexpr int kMatrices = 50;
  constexpr int kMacaulayBound = 6;
  constexpr int kKernelBound = 3;

  int agreed = 0;
  for (const testutil::MembershipPair& pair : testutil::membership_corpus(kPairs)) {
    bool gb = ideal_membership(pair.candidate, Ideal(pair.ring, pair.gens)).member;
    bool span = testutil::macaulay_member(pair.candidate, pair.gens, kMacaulayBound);
    if (gb == span) ++agreed;
  }
  EXPECT(agreed == kPairs);

  int complete = 0;
  for (const PolyMatrix& a : testutil::syzygy_corpus(kMatrices)) {
    PolyMatrix s = syzygies(a);
    EXPECT((a * s).is_zero());
    std::vector<VecPoly> cols;
    for (int j = 0; j < s.cols(); ++j) cols.push_back(s.column(j));
    bool all = true;
    for (const VecPoly& v : testutil::truncated_kernel(a, kKernelBound)) {
      bool reduced = !cols.empty() &&
                     vec_is_zero(module_normal_form(v, cols, a.ring()->order(),
                                                    ModulePosition::PositionOverTerm)
                                     .remainder);
      all = all && reduced;
    }
    if (all) ++complete;
  }
  EXPECT(complete == kMatrices);
}

// 7. Structural identities: d.d = 0 on every constructed complex, syzygies
//    annihilate, lifts validate, homotopy identities hold exactly, the top
//    block is order-independent modulo the tuple, and Leibniz/antisymmetry
//    hold for derivatives and jacobians.
void criterion_properties() {
  // d.d = 0 for Koszul complexes up to five variables.
  RingPtr r5 = make_ring({"x", "y", "z", "w", "v"});
  for (int p = 1; p <= 5; ++p) {
    std::vector<Polynomial> vars;
    for (int i = 0; i < p; ++i) vars.push_back(Polynomial::variable(r5, i));
    Complex K = koszul(r5, vars);
    for (int k = 1; k < K.length(); ++k) EXPECT((K.map(k) * K.map(k + 1)).is_zero());
  }

  RingPtr r = make_ring({"x", "y", "z"});
  Complex E = free_resolution(curve_ideal(r));
  for (int k = 1; k < E.length(); ++k) EXPECT((E.map(k) * E.map(k + 1)).is_zero());

  // Syzygy annihilation on a slice of the seeded corpus.
  for (const PolyMatrix& a : testutil::syzygy_corpus(10)) EXPECT((a * syzygies(a)).is_zero());

  // Lifts validate and homotopy identities are exact.
  Complex F = koszul(r, curve_tuple(r));
  ChainMap a = lift_morphism(F, E, PolyMatrix::identity(r, 1));
  EXPECT(validate_chain_map(F, E, a).valid);
  ChainMap hand = curve_hand_lift(r);
  Homotopy s = homotopy_between(F, E, a, hand);
  EXPECT(validate_homotopy(F, E, a, hand, s));

  // The top block does not depend on the module order, modulo the tuple.
  Ideal curve_t(r, curve_tuple(r));
  ChainMap top = lift_morphism(F, E, PolyMatrix::identity(r, 1), ModulePosition::TermOverPosition);
  EXPECT(congruent_blocks(a.blocks[2], top.blocks[2], curve_t));

  RingPtr r4 = make_ring({"x", "y", "z", "w"});
  Complex Ep = planes_hand_complex(r4);
  Complex Fp = koszul(r4, {P(r4, "x*z"), P(r4, "y*w")});
  ChainMap ap = lift_morphism(Fp, Ep, PolyMatrix::identity(r4, 1));
  ChainMap tp = lift_morphism(Fp, Ep, PolyMatrix::identity(r4, 1),
                              ModulePosition::TermOverPosition);
  Ideal planes_t(r4, {P(r4, "x*z"), P(r4, "y*w")});
  EXPECT(congruent_blocks(ap.blocks[2], tp.blocks[2], planes_t));

  // Leibniz rule and jacobian antisymmetry on seeded polynomials.
  std::mt19937 rng(987001);
  RingPtr r2 = make_ring({"x", "y"});
  for (int i = 0; i < 20; ++i) {
    Polynomial f = testutil::random_poly(r, rng, 3);
    Polynomial g = testutil::random_poly(r, rng, 3);
    for (int v = 0; v < 3; ++v)
      EXPECT(Polynomial(f * g).derivative(v) ==
             Polynomial(f.derivative(v) * g + f * g.derivative(v)));
    Polynomial u = testutil::random_poly(r2, rng, 3);
    Polynomial w = testutil::random_poly(r2, rng, 3);
    EXPECT(jacobian_det({u, w}) == Polynomial(-jacobian_det({w, u})));
    EXPECT(jacobian_det({u.scaled(Rational(3)), w}) ==
           jacobian_det({u, w}).scaled(Rational(3)));
  }
}

// 8. Determinism: the full curve-plus-planes session emits byte-identical
//    structured output across three consecutive runs.
void criterion_determinism() {
  const std::string curve_src =
      "ring x, y, z;\n"
      "ideal J = y^2 - x*z, x^3 - y*z, x^2*y - z^2;\n"
      "ideal I = z^2 - x^2*y, x^4 + y^3 - 2*x*y*z;\n"
      "E = res J;\n"
      "F = koszul I;\n"
      "a = lift F -> E;\n"
      "print E;\n"
      "print a;\n"
      "check-exact E;\n"
      "check-cm J;\n"
      "dim J;\n"
      "residue-report I -> J;\n";
  const std::string planes_src =
      "ring x, y, z, w;\n"
      "ideal J = x*z, x*w, y*z, y*w;\n"
      "ideal g = x*z, y*w;\n"
      "E = res J;\n"
      "F = koszul g;\n"
      "a = lift F -> E;\n"
      "b = lift F -> E;\n"
      "s = homotopy a, b;\n"
      "print E;\n"
      "print a;\n"
      "print s;\n"
      "I2 = fitting E, 2;\n"
      "print I2;\n"
      "check-exact E;\n"
      "check-cm J;\n"
      "dim J;\n";
  std::string first;
  for (int run = 0; run < 3; ++run) {
    std::string out = emit_json(run_session(parse_session(curve_src))) +
                      emit_json(run_session(parse_session(planes_src)));
    if (run == 0) {
      first = out;
      EXPECT(!first.empty());
    } else {
      EXPECT(out == first);
    }
  }
}

struct Criterion {
  const char* label;
  void (*fn)();
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"curve resolution: ranks (1,3,2), fitting ideals, exact, CM", criterion_curve_resolution},
      {"curve lift: hand map validates, computed lift homotopic and congruent",
       criterion_curve_lift},
      {"skew planes: ranks (1,4,4,1), non-CM, hand complex and lift validate",
       criterion_planes},
      {"constant generator change: determinant lift [-2], generic lift congruent",
       criterion_constant_scaling},
      {"jacobian membership equals codim < 2 on 200 seeded tuples, under 60 s",
       criterion_jacobian_dichotomy},
      {"Groebner membership and syzygies agree with independent oracles (100 + 50)",
       criterion_oracles},
      {"structural identities: d.d = 0, annihilation, lifts, homotopies, orders",
       criterion_properties},
      {"byte-identical structured output across 3 session runs", criterion_determinism},
  };

  int passed = 0;
  const int total = static_cast<int>(sizeof(criteria) / sizeof(criteria[0]));
  std::printf("acceptance gate: %d criteria\n", total);
  for (int i = 0; i < total; ++i) {
    g_ok = true;
    g_notes.clear();
    g_info.clear();
    try {
      criteria[i].fn();
    } catch (const std::exception& e) {
      g_ok = false;
      g_notes.push_back(std::string("exception: ") + e.what());
    }
    std::printf("[%d] %s %s%s%s%s\n", i + 1, g_ok ? "PASS" : "FAIL", criteria[i].label,
                g_info.empty() ? "" : " (", g_info.c_str(), g_info.empty() ? "" : ")");
    for (const std::string& note : g_notes) std::printf("      %s\n", note.c_str());
    if (g_ok) ++passed;
  }
  std::printf("acceptance gate: %d/%d passed\n", passed, total);
  return passed == total ? 0 : 1;
}
