#ifndef RESLIFT_PARSE_HPP
#define RESLIFT_PARSE_HPP

#include <string>
#include <vector>

#include "reslift/polynomial.hpp"

namespace reslift {

// Expression grammar (explicit '*' required, '^' with nonnegative integer
// exponents, integer and integer/integer literals, unary minus, parens):
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ['^' INT]
//   atom   := INT ['/' INT] | VAR | '(' expr ')'
// Unknown variables, negative exponents, adjacent factors without '*', and
// trailing input all raise ParseError with 1-based line:column.
Polynomial parse_polynomial(const std::string& text, const RingPtr& ring);

enum class Verb {
  Ring,
  IdealDecl,
  MatrixDecl,
  Res,
  Koszul,
  Lift,
  Homotopy,
  Fitting,
  Print,
  CheckExact,
  CheckCm,
  Dim,
  ResidueReport,
  JacobianTest,
};

// One parsed session statement.  Which fields are populated depends on the
// verb; `text` is the canonical re-rendering used for logs and the
// structured output's command list.
struct SessionCommand {
  Verb verb;
  int line = 0;
  int col = 0;
  std::string bind;                           // bound name ("" for actions)
  std::vector<std::string> names;             // referenced names, in order
  std::vector<Polynomial> polys;              // inline polynomial list
  std::vector<std::vector<Polynomial>> rows;  // matrix literal rows
  int number = -1;                            // res max length / fitting k
  std::string text;
};

struct Session {
  RingPtr ring;
  std::vector<SessionCommand> commands;  // ring statement included, first
};

// Statement language ('--' comments, ';' terminators):
//   ring x, y, z;
//   ideal J = y^2 - x*z, x^3 - y*z;
//   matrix m = [[0, y], [0, x], [-1, 0]];
//   E = res J;          E = res J, 4;
//   F = koszul J;
//   a = lift F -> E;    a = lift F -> E, m;
//   s = homotopy a, b;
//   I2 = fitting E, 2;
//   print a;  check-exact E;  check-cm J;  dim J;
//   residue-report I -> J;  jacobian-test x^2, x*y;
// The ring statement must come first and appear exactly once; every name
// binds once and must be bound before use with the kind the verb expects.
Session parse_session(const std::string& text,
                      const MonomialOrder& order = MonomialOrder::grevlex());

}  // namespace reslift

#endif
