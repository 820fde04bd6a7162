#include <doctest.h>

#include <string>
#include <vector>

#include "reslift/errors.hpp"
#include "reslift/groebner.hpp"
#include "reslift/residue.hpp"
#include "test_util.hpp"

using namespace reslift;
using testutil::P;

namespace {

RingPtr xy() { return make_ring({"x", "y"}); }
RingPtr xyz() { return make_ring({"x", "y", "z"}); }

Ideal curve_ideal(const RingPtr& r) {
  return Ideal(r, {P(r, "y^2 - x*z"), P(r, "x^3 - y*z"), P(r, "x^2*y - z^2")});
}

std::vector<Polynomial> curve_tuple(const RingPtr& r) {
  return {P(r, "z^2 - x^2*y"), P(r, "x^4 + y^3 - 2*x*y*z")};
}

}  // namespace

TEST_CASE("jacobian determinants") {
  RingPtr r = xy();
  CHECK(jacobian_det({P(r, "x"), P(r, "y")}) == P(r, "1"));
  CHECK(jacobian_det({P(r, "x^2"), P(r, "x*y")}) == P(r, "2*x^2"));
  CHECK(jacobian_det({P(r, "x*y"), P(r, "x")}) == P(r, "-x"));

  // Swapping two tuple entries flips the sign.
  CHECK(jacobian_det({P(r, "x^2 + y"), P(r, "x*y")}) ==
        -jacobian_det({P(r, "x*y"), P(r, "x^2 + y")}));

  CHECK_THROWS_WITH_AS(jacobian_det({}), "jacobian of an empty tuple", DomainError);
  CHECK_THROWS_WITH_AS(jacobian_det({P(r, "x")}),
                       "jacobian needs as many polynomials as variables", DomainError);
}

TEST_CASE("jacobian membership criterion: fixtures") {
  RingPtr r = xy();

  // Full codimension: the jacobian stays outside the ideal.
  HickelVerdict regular = hickel_test({P(r, "x"), P(r, "y")});
  CHECK(regular.jacobian == P(r, "1"));
  CHECK(regular.codim == 2);
  CHECK(!regular.member);
  CHECK(regular.certificate.empty());

  // Dropped codimension: the jacobian falls in, with an exact certificate.
  HickelVerdict dependent = hickel_test({P(r, "x^2"), P(r, "x*y")});
  CHECK(dependent.jacobian == P(r, "2*x^2"));
  CHECK(dependent.codim == 1);
  CHECK(dependent.member);
  REQUIRE(dependent.certificate.size() == 2);
  CHECK(dependent.certificate[0] == P(r, "2"));
  CHECK(dependent.certificate[1].is_zero());

  // A singular tuple: zero jacobian is a member of anything.
  HickelVerdict repeated = hickel_test({P(r, "x"), P(r, "x")});
  CHECK(repeated.jacobian.is_zero());
  CHECK(repeated.member);
  CHECK(repeated.codim == 1);

  CHECK_THROWS_WITH_AS(hickel_test({P(r, "x + 1"), P(r, "y")}),
                       "tuple must vanish at the origin", DomainError);
}

TEST_CASE("jacobian membership criterion: seeded corpus") {
  auto corpus = testutil::hickel_corpus(50);
  REQUIRE(corpus.size() == 50);
  for (size_t i = 0; i < corpus.size(); ++i) {
    const auto& f = corpus[i];
    HickelVerdict v = hickel_test(f);
    if (i % 2 == 0) {
      // One entry divides the other: membership with codimension one.
      CHECK(v.member);
      CHECK(v.codim == 1);
      Polynomial recon = Polynomial::zero(f[0].ring());
      for (size_t j = 0; j < f.size(); ++j) recon += v.certificate[j] * f[j];
      CHECK(recon == v.jacobian);
    } else {
      // Complete intersection: the jacobian never falls in.
      CHECK(!v.member);
      CHECK(v.codim == 2);
    }
  }
}

TEST_CASE("transformation law for the curve example") {
  RingPtr r = xyz();
  std::vector<Polynomial> f = curve_tuple(r);
  Ideal J = curve_ideal(r);
  ResidueReport report = transformation_report(f, J);

  CHECK(report.tuple == f);
  CHECK(report.target_ranks == std::vector<int>{1, 3, 2});
  REQUIRE(report.coefficients.size() == 2);
  CHECK(report.coefficients[0] == P(r, "x^3 - y*z"));
  CHECK(report.coefficients[1] == P(r, "y^2 - x*z"));
  CHECK(ideal_equal(report.congruence, Ideal(r, f)));

  // The coefficient column is well defined modulo the tuple: a lift under
  // the other module order lands in the same congruence classes.
  ResidueReport other = transformation_report(f, J, ModulePosition::TermOverPosition);
  REQUIRE(other.coefficients.size() == 2);
  for (size_t i = 0; i < 2; ++i)
    CHECK(congruent_mod(report.coefficients[i], other.coefficients[i], report.congruence));
}

TEST_CASE("transformation law: small closed forms") {
  RingPtr r = xy();

  // A tuple against itself transforms with coefficient 1.
  std::vector<Polynomial> axes = {P(r, "x"), P(r, "y")};
  ResidueReport self = transformation_report(axes, Ideal(r, axes));
  CHECK(self.target_ranks == std::vector<int>{1, 2, 1});
  REQUIRE(self.coefficients.size() == 1);
  CHECK(self.coefficients[0] == P(r, "1"));

  // (x^2, y) inside (x, y): the multiplier is x.
  std::vector<Polynomial> f = {P(r, "x^2"), P(r, "y")};
  ResidueReport rep = transformation_report(f, Ideal(r, axes));
  REQUIRE(rep.coefficients.size() == 1);
  CHECK(congruent_mod(rep.coefficients[0], P(r, "x"), Ideal(r, f)));
}

TEST_CASE("transformation law rejects malformed inputs") {
  RingPtr r = xy();
  Ideal axes(r, {P(r, "x"), P(r, "y")});

  CHECK_THROWS_WITH_AS(transformation_report({}, axes), "empty tuple", DomainError);
  CHECK_THROWS_WITH_AS(transformation_report({Polynomial::zero(r), P(r, "y")}, axes),
                       "tuple entry 1 is zero", DomainError);
  CHECK_THROWS_WITH_AS(transformation_report({P(r, "x"), P(r, "y + 1")}, axes),
                       "tuple entry 2 is not in the target ideal", DomainError);
  CHECK_THROWS_WITH_AS(transformation_report({P(r, "x"), P(r, "x*y")}, axes),
                       "tuple has codimension 1, expected 2", DomainError);

  RingPtr r3 = xyz();
  Ideal point(r3, {P(r3, "x"), P(r3, "y"), P(r3, "z")});
  CHECK_THROWS_WITH_AS(transformation_report({P(r3, "x"), P(r3, "y")}, point),
                       "target ideal has codimension 3, expected 2", DomainError);

  RingPtr r4 = make_ring({"x", "y", "z", "w"});
  Ideal planes(r4, {P(r4, "x*z"), P(r4, "x*w"), P(r4, "y*z"), P(r4, "y*w")});
  CHECK_THROWS_WITH_AS(
      transformation_report({P(r4, "x*z"), P(r4, "y*w")}, planes),
      "target ideal is not Cohen-Macaulay: resolution length 3, codimension 2",
      DomainError);
}
