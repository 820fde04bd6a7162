#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "reslift/errors.hpp"
#include "reslift/format.hpp"
#include "reslift/parse.hpp"
#include "test_util.hpp"

using namespace reslift;
using testutil::P;

namespace {

RingPtr xyz() { return make_ring({"x", "y", "z"}); }

// Expect a ParseError with this exact what() text (message + " at L:C")
// and matching position fields.
template <typename Fn>
void rejects(Fn&& fn, const std::string& what, int line, int col) {
  try {
    fn();
    FAIL_CHECK("no ParseError for expected rejection: " << what);
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()) == what);
    CHECK(e.line == line);
    CHECK(e.col == col);
  }
}

}  // namespace

TEST_CASE("polynomial grammar: literals, precedence, parens") {
  RingPtr r = xyz();
  Polynomial x = Polynomial::variable(r, 0);
  Polynomial y = Polynomial::variable(r, 1);
  Polynomial z = Polynomial::variable(r, 2);
  Polynomial one = Polynomial::constant(r, Rational(1));

  CHECK(parse_polynomial("x + y", r) == x + y);
  CHECK(parse_polynomial("x+y", r) == x + y);
  CHECK(parse_polynomial("1/2*x", r) == Polynomial::constant(r, Rational(1, 2)) * x);
  CHECK(parse_polynomial("2/4", r) == Polynomial::constant(r, Rational(1, 2)));
  CHECK(parse_polynomial("-x + 3", r) == Polynomial::constant(r, Rational(3)) - x);
  CHECK(parse_polynomial("-x^2", r) == -(x * x));
  CHECK(parse_polynomial("x^0", r) == one);
  CHECK(parse_polynomial("x^1", r) == x);
  CHECK(parse_polynomial("0", r).is_zero());
  CHECK(parse_polynomial("x - x", r).is_zero());

  // '*' binds tighter than '+'; '^' tighter than '*'; parens group.
  CHECK(parse_polynomial("x + y*z", r) == x + y * z);
  CHECK(parse_polynomial("x + y*z", r) != parse_polynomial("(x + y)*z", r));
  CHECK(parse_polynomial("x*y^2", r) == x * y * y);
  CHECK(parse_polynomial("(x*y)^2", r) == x * x * y * y);
  CHECK(parse_polynomial("(x + y)*(x - y)", r) == x * x - y * y);

  CHECK(parse_polynomial("x^2*y + 3*x - 1/3", r) ==
        x * x * y + Polynomial::constant(r, Rational(3)) * x -
            Polynomial::constant(r, Rational(1, 3)));

  // Whitespace and comments are insignificant inside expressions.
  CHECK(parse_polynomial("  x \n + -- tail\n y ", r) == x + y);
}

TEST_CASE("polynomial grammar: rejections carry line:col") {
  RingPtr r = xyz();
  auto parse = [&](const std::string& s) { return [&r, s] { parse_polynomial(s, r); }; };

  rejects(parse("x y"), "adjacent factors; explicit '*' required at 1:3", 1, 3);
  rejects(parse("2x"), "adjacent factors; explicit '*' required at 1:2", 1, 2);
  rejects(parse("x(y + 1)"), "adjacent factors; explicit '*' required at 1:2", 1, 2);
  rejects(parse("x^-1"), "exponent must be a nonnegative integer at 1:3", 1, 3);
  rejects(parse("x^y"), "expected integer exponent after '^' at 1:3", 1, 3);
  rejects(parse("x^1000000000"), "integer literal too large at 1:3", 1, 3);
  rejects(parse("w + 1"), "unknown variable 'w' at 1:1", 1, 1);
  rejects(parse("x + )"), "expected a polynomial factor at 1:5", 1, 5);
  rejects(parse("(x + y"), "expected ')' at 1:7", 1, 7);
  rejects(parse("1/0"), "zero denominator in rational literal at 1:3", 1, 3);
  rejects(parse("1/x"), "expected integer denominator after '/' at 1:3", 1, 3);
  rejects(parse("x @ y"), "unexpected character '@' at 1:3", 1, 3);
  rejects(parse("x, y"), "unexpected trailing input at 1:2", 1, 2);
  rejects(parse("x * - y"), "expected a polynomial factor at 1:5", 1, 5);
  rejects(parse("x +\n  q"), "unknown variable 'q' at 2:3", 2, 3);

  CHECK_THROWS_WITH_AS(parse_polynomial("x", nullptr), "null ring", DomainError);
}

TEST_CASE("session statements parse to canonical text") {
  const std::string src =
      "ring x, y, z;\n"
      "ideal J = y^2 - x*z, x^3 - y*z, x^2*y - z^2;\n"
      "ideal I = z^2 - x^2*y, x^4 + y^3 - 2*x*y*z;\n"
      "E = res J;\n"
      "F = koszul I;\n"
      "a = lift F -> E;\n"
      "print a;\n";
  Session s = parse_session(src);

  REQUIRE(s.ring != nullptr);
  CHECK(s.ring->str() == "QQ[x, y, z] grevlex");
  REQUIRE(s.commands.size() == 7);

  CHECK(s.commands[0].verb == Verb::Ring);
  CHECK(s.commands[0].text == "ring x, y, z");
  CHECK(s.commands[1].verb == Verb::IdealDecl);
  CHECK(s.commands[1].bind == "J");
  CHECK(s.commands[1].polys.size() == 3);
  CHECK(s.commands[1].text == "ideal J = y^2 - x*z, x^3 - y*z, x^2*y - z^2");
  // Terms re-render in ring order, whatever order the source wrote them.
  CHECK(s.commands[2].text == "ideal I = -x^2*y + z^2, x^4 + y^3 - 2*x*y*z");
  CHECK(s.commands[3].verb == Verb::Res);
  CHECK(s.commands[3].bind == "E");
  CHECK(s.commands[3].names == std::vector<std::string>{"J"});
  CHECK(s.commands[3].number == -1);
  CHECK(s.commands[3].text == "E = res J");
  CHECK(s.commands[4].verb == Verb::Koszul);
  CHECK(s.commands[4].text == "F = koszul I");
  CHECK(s.commands[5].verb == Verb::Lift);
  CHECK(s.commands[5].names == std::vector<std::string>{"F", "E"});
  CHECK(s.commands[5].text == "a = lift F -> E");
  CHECK(s.commands[6].verb == Verb::Print);
  CHECK(s.commands[6].bind.empty());
  CHECK(s.commands[6].names == std::vector<std::string>{"a"});
  CHECK(s.commands[6].text == "print a");
  for (const SessionCommand& c : s.commands) CHECK(c.line > 0);
  CHECK(s.commands[6].line == 7);
}

TEST_CASE("session statements: every verb form") {
  const std::string src =
      "ring x, y;  -- two variables suffice here\n"
      "ideal J = x, y;\n"
      "matrix m = [[0, y], [0, x], [-1, 0]];\n"
      "E = res J, 4;\n"
      "F = koszul J;\n"
      "a = lift F -> E, m;\n"
      "b = lift F -> E;\n"
      "s = homotopy a, b;\n"
      "I2 = fitting E, 2;\n"
      "check-exact E;\n"
      "check-cm J;\n"
      "dim J;\n"
      "residue-report J -> J;\n"
      "jacobian-test x^2, x*y;\n"
      "print s;\n";
  Session s = parse_session(src);
  REQUIRE(s.commands.size() == 15);

  CHECK(s.commands[2].verb == Verb::MatrixDecl);
  CHECK(s.commands[2].rows.size() == 3);
  CHECK(s.commands[2].rows[0].size() == 2);
  CHECK(s.commands[2].text == "matrix m = [[0, y], [0, x], [-1, 0]]");
  CHECK(s.commands[3].number == 4);
  CHECK(s.commands[3].text == "E = res J, 4");
  CHECK(s.commands[5].names == std::vector<std::string>{"F", "E", "m"});
  CHECK(s.commands[5].text == "a = lift F -> E, m");
  CHECK(s.commands[7].verb == Verb::Homotopy);
  CHECK(s.commands[7].names == std::vector<std::string>{"a", "b"});
  CHECK(s.commands[7].text == "s = homotopy a, b");
  CHECK(s.commands[8].verb == Verb::Fitting);
  CHECK(s.commands[8].number == 2);
  CHECK(s.commands[8].text == "I2 = fitting E, 2");
  CHECK(s.commands[9].verb == Verb::CheckExact);
  CHECK(s.commands[9].text == "check-exact E");
  CHECK(s.commands[10].verb == Verb::CheckCm);
  CHECK(s.commands[10].text == "check-cm J");
  CHECK(s.commands[11].verb == Verb::Dim);
  CHECK(s.commands[11].text == "dim J");
  CHECK(s.commands[12].verb == Verb::ResidueReport);
  CHECK(s.commands[12].names == std::vector<std::string>{"J", "J"});
  CHECK(s.commands[12].text == "residue-report J -> J");
  CHECK(s.commands[13].verb == Verb::JacobianTest);
  CHECK(s.commands[13].polys.size() == 2);
  CHECK(s.commands[13].text == "jacobian-test x^2, x*y");
  CHECK(s.commands[14].text == "print s");
}

TEST_CASE("session parsing: empty input and order selection") {
  Session empty = parse_session("");
  CHECK(empty.ring == nullptr);
  CHECK(empty.commands.empty());

  Session commented = parse_session("-- nothing but comments\n-- here\n");
  CHECK(commented.ring == nullptr);
  CHECK(commented.commands.empty());

  Session lexed = parse_session("ring x, y;", MonomialOrder::lex());
  REQUIRE(lexed.ring != nullptr);
  CHECK(lexed.ring->order().str() == "lex");
}

TEST_CASE("session rejections carry line:col") {
  auto sess = [](const std::string& s) { return [s] { parse_session(s); }; };

  rejects(sess("ideal J = x;"), "ring must be declared first at 1:7", 1, 7);
  rejects(sess("ring x;\nring y;"), "only one ring per session at 2:1", 2, 1);
  rejects(sess("ring x, x;"), "duplicate variable 'x' at 1:1", 1, 1);
  rejects(sess("ring ideal;"),
          "reserved word 'ideal' cannot be used as a variable at 1:6", 1, 6);
  rejects(sess("ring x;\nideal res = x;"),
          "reserved word 'res' cannot be used as a name at 2:7", 2, 7);
  rejects(sess("ring x;\nideal J = x;\nideal J = x;"),
          "duplicate binding 'J' at 3:7", 3, 7);
  rejects(sess("ring x;\nideal x = x;"),
          "'x' is already a ring variable at 2:7", 2, 7);
  rejects(sess("ring x;\nprint a;"), "name 'a' is not bound at 2:7", 2, 7);
  rejects(sess("ring x;\nideal J = x;\na = lift J -> J;"),
          "name 'J' is not a complex at 3:10", 3, 10);
  rejects(sess("ring x;\nideal J = x;\ncheck-exact J;"),
          "name 'J' is not a complex at 3:13", 3, 13);
  rejects(sess("ring x;\nideal J = x;\nE = res J;\ncheck-cm E;"),
          "name 'E' is not an ideal at 4:10", 4, 10);
  rejects(sess("ring x;\nideal J = x;\nE = res J;\ns = homotopy E, E;"),
          "name 'E' is not a chain map at 4:14", 4, 14);
  rejects(sess("ring x;\nmatrix m = [[x, 0], [x]];"),
          "ragged matrix rows at 2:21", 2, 21);
  rejects(sess("ring x;\ncheck J;"), "misplaced keyword 'check' at 2:1", 2, 1);
  rejects(sess("ring x;\ncheck - exact E;"),
          "misplaced keyword 'check' at 2:1", 2, 1);
  rejects(sess("ring x;\nideal J = x;\na = frobnicate J;"),
          "unknown verb 'frobnicate' at 3:5", 3, 5);
  rejects(sess("ring x"), "expected ';' at 1:7", 1, 7);
  rejects(sess("ring x;\nfoo bar;"), "expected '=' after 'foo' at 2:5", 2, 5);
  rejects(sess("ring x;\nideal J = x;\nE = res J, x;"),
          "expected an integer bound at 3:12", 3, 12);
}

TEST_CASE("parse round-trips the canonical rendering") {
  std::vector<RingPtr> rings = {
      make_ring({"x", "y", "z"}, MonomialOrder::grevlex()),
      make_ring({"x", "y", "z"}, MonomialOrder::lex()),
      make_ring({"x", "y", "z"}, MonomialOrder::wgrevlex({2, 3, 5})),
  };
  std::mt19937 rng(424242);
  for (const RingPtr& r : rings) {
    for (int i = 0; i < 40; ++i) {
      Polynomial p = testutil::random_poly(r, rng, 4, 5);
      CHECK(parse_polynomial(format_polynomial(p), r) == p);
    }
  }
  RingPtr r = rings[0];
  CHECK(parse_polynomial(format_polynomial(Polynomial::zero(r)), r).is_zero());
}
