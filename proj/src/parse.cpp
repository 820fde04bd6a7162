#include "reslift/parse.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <set>

#include "reslift/errors.hpp"
#include "reslift/format.hpp"

namespace reslift {

namespace {

enum class Tok {
  Ident, Int, Plus, Minus, Star, Caret, Slash, LParen, RParen,
  LBracket, RBracket, Comma, Semi, Equal, Arrow, End,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
  size_t offset;
};

class Lexer {
 public:
  explicit Lexer(const std::string& src) : src_(src) { advance(); }

  const Token& peek() const { return cur_; }
  Token next() {
    Token t = cur_;
    advance();
    return t;
  }

 private:
  void advance() {
    skip_ws_and_comments();
    cur_.line = line_;
    cur_.col = col_;
    cur_.offset = pos_;
    cur_.text.clear();
    if (pos_ >= src_.size()) {
      cur_.kind = Tok::End;
      return;
    }
    char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        take();
      cur_.kind = Tok::Ident;
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) take();
      cur_.kind = Tok::Int;
      return;
    }
    take();
    switch (c) {
      case '+': cur_.kind = Tok::Plus; return;
      case '-':
        if (pos_ < src_.size() && src_[pos_] == '>') {
          take();
          cur_.kind = Tok::Arrow;
        } else {
          cur_.kind = Tok::Minus;
        }
        return;
      case '*': cur_.kind = Tok::Star; return;
      case '^': cur_.kind = Tok::Caret; return;
      case '/': cur_.kind = Tok::Slash; return;
      case '(': cur_.kind = Tok::LParen; return;
      case ')': cur_.kind = Tok::RParen; return;
      case '[': cur_.kind = Tok::LBracket; return;
      case ']': cur_.kind = Tok::RBracket; return;
      case ',': cur_.kind = Tok::Comma; return;
      case ';': cur_.kind = Tok::Semi; return;
      case '=': cur_.kind = Tok::Equal; return;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", line_,
                         col_ - 1);
    }
  }

  void skip_ws_and_comments() {
    for (;;) {
      while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) {
        if (src_[pos_] == '\n') {
          ++line_;
          col_ = 1;
        } else {
          ++col_;
        }
        ++pos_;
      }
      // '--' comments run to end of line.
      if (pos_ + 1 < src_.size() && src_[pos_] == '-' && src_[pos_ + 1] == '-') {
        while (pos_ < src_.size() && src_[pos_] != '\n') {
          ++pos_;
          ++col_;
        }
        continue;
      }
      return;
    }
  }

  void take() {
    cur_.text += src_[pos_];
    ++pos_;
    ++col_;
  }

  const std::string& src_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token cur_;
};

[[noreturn]] void fail(const Token& t, const std::string& msg) {
  throw ParseError(msg, t.line, t.col);
}

int parse_small_int(const Token& t) {
  if (t.text.size() > 9) fail(t, "integer literal too large");
  return std::stoi(t.text);
}

// ---- polynomial expressions -------------------------------------------------

class ExprParser {
 public:
  ExprParser(Lexer& lx, const RingPtr& ring) : lx_(lx), ring_(ring) {}

  Polynomial expr() {
    bool neg = false;
    if (lx_.peek().kind == Tok::Minus) {
      lx_.next();
      neg = true;
    }
    Polynomial p = term();
    if (neg) p = -p;
    for (;;) {
      Tok k = lx_.peek().kind;
      if (k == Tok::Plus) {
        lx_.next();
        p += term();
      } else if (k == Tok::Minus) {
        lx_.next();
        p -= term();
      } else {
        check_no_adjacent_factor();
        return p;
      }
    }
  }

 private:
  Polynomial term() {
    Polynomial p = factor();
    while (lx_.peek().kind == Tok::Star) {
      lx_.next();
      p = p * factor();
    }
    return p;
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (lx_.peek().kind == Tok::Caret) {
      Token caret = lx_.next();
      Token e = lx_.peek();
      if (e.kind == Tok::Minus) fail(e, "exponent must be a nonnegative integer");
      if (e.kind != Tok::Int) fail(e, "expected integer exponent after '^'");
      lx_.next();
      int n = parse_small_int(e);
      Polynomial p = Polynomial::constant(ring_, Rational(1));
      for (int i = 0; i < n; ++i) p = p * base;
      (void)caret;
      base = p;
    }
    return base;
  }

  Polynomial atom() {
    Token t = lx_.peek();
    switch (t.kind) {
      case Tok::Int: {
        lx_.next();
        Rational c = Rational::from_string(t.text);
        if (lx_.peek().kind == Tok::Slash) {
          lx_.next();
          Token d = lx_.peek();
          if (d.kind != Tok::Int) fail(d, "expected integer denominator after '/'");
          lx_.next();
          Rational den = Rational::from_string(d.text);
          if (den.is_zero()) fail(d, "zero denominator in rational literal");
          c = c / den;
        }
        check_no_adjacent_factor();
        return Polynomial::constant(ring_, c);
      }
      case Tok::Ident: {
        lx_.next();
        int v = ring_->find_var(t.text);
        if (v < 0) fail(t, "unknown variable '" + t.text + "'");
        check_no_adjacent_factor();
        return Polynomial::variable(ring_, v);
      }
      case Tok::LParen: {
        lx_.next();
        Polynomial p = expr();
        Token close = lx_.peek();
        if (close.kind != Tok::RParen) fail(close, "expected ')'");
        lx_.next();
        check_no_adjacent_factor();
        return p;
      }
      default:
        fail(t, "expected a polynomial factor");
    }
  }

  // "x y" / "2x" / "x(y+1)" are rejected rather than silently multiplied.
  void check_no_adjacent_factor() {
    Tok k = lx_.peek().kind;
    if (k == Tok::Ident || k == Tok::Int || k == Tok::LParen)
      fail(lx_.peek(), "adjacent factors; explicit '*' required");
  }

  Lexer& lx_;
  const RingPtr& ring_;
};

// ---- session statements -----------------------------------------------------

const std::set<std::string>& reserved_words() {
  static const std::set<std::string> kWords = {
      "ring", "ideal", "matrix", "res", "koszul", "lift", "homotopy",
      "fitting", "print", "dim", "check", "exact", "cm", "residue",
      "report", "jacobian", "test"};
  return kWords;
}

enum class ObjKind { Ideal, Matrix, Complex, ChainMap, Homotopy };

const char* kind_name(ObjKind k) {
  switch (k) {
    case ObjKind::Ideal: return "an ideal";
    case ObjKind::Matrix: return "a matrix";
    case ObjKind::Complex: return "a complex";
    case ObjKind::ChainMap: return "a chain map";
    case ObjKind::Homotopy: return "a homotopy";
  }
  return "?";
}

class SessionParser {
 public:
  SessionParser(const std::string& text, const MonomialOrder& order)
      : lx_(text), order_(order) {}

  Session run() {
    Session s;
    while (lx_.peek().kind != Tok::End) {
      SessionCommand cmd = statement(s);
      s.commands.push_back(std::move(cmd));
    }
    return s;
  }

 private:
  Lexer lx_;
  const MonomialOrder& order_;
  RingPtr ring_;
  std::map<std::string, ObjKind> bound_;

  // Reads "ident(-ident)*" in verb position, gluing adjacent pieces so the
  // hyphenated verbs lex naturally while '-' stays subtraction elsewhere.
  std::string read_verb_word(Token& first) {
    first = lx_.peek();
    if (first.kind != Tok::Ident) fail(first, "expected a statement");
    lx_.next();
    std::string word = first.text;
    size_t end = first.offset + first.text.size();
    while (lx_.peek().kind == Tok::Minus && lx_.peek().offset == end) {
      size_t dash = lx_.peek().offset;
      lx_.next();
      Token part = lx_.peek();
      if (part.kind != Tok::Ident || part.offset != dash + 1)
        fail(part, "expected statement keyword after '-'");
      lx_.next();
      word += '-' + part.text;
      end = part.offset + part.text.size();
    }
    return word;
  }

  Token expect(Tok k, const std::string& what) {
    Token t = lx_.peek();
    if (t.kind != k) fail(t, "expected " + what);
    return lx_.next();
  }

  void finish(SessionCommand& cmd) { expect(Tok::Semi, "';'"); (void)cmd; }

  void need_ring(const Token& at) {
    if (!ring_) throw ParseError("ring must be declared first", at.line, at.col);
  }

  std::string fresh_name(const Token& t) {
    if (reserved_words().count(t.text))
      fail(t, "reserved word '" + t.text + "' cannot be used as a name");
    if (bound_.count(t.text)) fail(t, "duplicate binding '" + t.text + "'");
    if (ring_ && ring_->find_var(t.text) >= 0)
      fail(t, "'" + t.text + "' is already a ring variable");
    return t.text;
  }

  std::string used_name(ObjKind want) {
    Token t = expect(Tok::Ident, "a name");
    auto it = bound_.find(t.text);
    if (it == bound_.end()) fail(t, "name '" + t.text + "' is not bound");
    if (it->second != want)
      fail(t, "name '" + t.text + "' is not " + kind_name(want));
    return t.text;
  }

  std::vector<Polynomial> poly_list() {
    std::vector<Polynomial> ps;
    ExprParser ep(lx_, ring_);
    ps.push_back(ep.expr());
    while (lx_.peek().kind == Tok::Comma) {
      lx_.next();
      ps.push_back(ep.expr());
    }
    return ps;
  }

  std::vector<std::vector<Polynomial>> matrix_literal() {
    expect(Tok::LBracket, "'['");
    std::vector<std::vector<Polynomial>> rows;
    for (;;) {
      Token open = expect(Tok::LBracket, "'[' starting a row");
      std::vector<Polynomial> row = poly_list();
      expect(Tok::RBracket, "']' ending a row");
      rows.push_back(std::move(row));
      if (rows.back().size() != rows.front().size())
        throw ParseError("ragged matrix rows", open.line, open.col);
      if (lx_.peek().kind == Tok::Comma) {
        lx_.next();
        continue;
      }
      break;
    }
    expect(Tok::RBracket, "']' ending the matrix");
    return rows;
  }

  SessionCommand statement(Session& session) {
    Token first;
    std::string word = read_verb_word(first);
    SessionCommand cmd;
    cmd.line = first.line;
    cmd.col = first.col;

    if (word == "ring") return ring_stmt(session, cmd);
    if (word == "ideal") return ideal_stmt(cmd);
    if (word == "matrix") return matrix_stmt(cmd);
    if (word == "print") return one_name_action(cmd, Verb::Print, "print", std::nullopt);
    if (word == "check-exact")
      return one_name_action(cmd, Verb::CheckExact, "check-exact", ObjKind::Complex);
    if (word == "check-cm")
      return one_name_action(cmd, Verb::CheckCm, "check-cm", ObjKind::Ideal);
    if (word == "dim") return one_name_action(cmd, Verb::Dim, "dim", ObjKind::Ideal);
    if (word == "residue-report") return residue_stmt(cmd);
    if (word == "jacobian-test") return jacobian_stmt(cmd);

    // Otherwise: a binding "name = verbexpr;".
    if (reserved_words().count(word))
      fail(first, "misplaced keyword '" + word + "'");
    if (lx_.peek().kind != Tok::Equal)
      fail(lx_.peek(), "expected '=' after '" + word + "'");
    std::string bind = fresh_name(first);
    lx_.next();  // '='
    return binding_stmt(cmd, bind);
  }

  SessionCommand ring_stmt(Session& session, SessionCommand& cmd) {
    if (ring_) throw ParseError("only one ring per session", cmd.line, cmd.col);
    cmd.verb = Verb::Ring;
    std::vector<std::string> vars;
    for (;;) {
      Token v = expect(Tok::Ident, "a variable name");
      if (reserved_words().count(v.text))
        fail(v, "reserved word '" + v.text + "' cannot be used as a variable");
      vars.push_back(v.text);
      if (lx_.peek().kind == Tok::Comma) {
        lx_.next();
        continue;
      }
      break;
    }
    finish(cmd);
    try {
      ring_ = make_ring(vars, order_);
    } catch (const DomainError& e) {
      throw ParseError(e.what(), cmd.line, cmd.col);
    }
    session.ring = ring_;
    cmd.text = "ring ";
    for (size_t i = 0; i < vars.size(); ++i) {
      if (i) cmd.text += ", ";
      cmd.text += vars[i];
    }
    return cmd;
  }

  SessionCommand ideal_stmt(SessionCommand& cmd) {
    cmd.verb = Verb::IdealDecl;
    Token name = expect(Tok::Ident, "a name after 'ideal'");
    need_ring(name);
    cmd.bind = fresh_name(name);
    expect(Tok::Equal, "'='");
    cmd.polys = poly_list();
    finish(cmd);
    bound_[cmd.bind] = ObjKind::Ideal;
    cmd.text = "ideal " + cmd.bind + " = ";
    for (size_t i = 0; i < cmd.polys.size(); ++i) {
      if (i) cmd.text += ", ";
      cmd.text += format_polynomial(cmd.polys[i]);
    }
    return cmd;
  }

  SessionCommand matrix_stmt(SessionCommand& cmd) {
    cmd.verb = Verb::MatrixDecl;
    Token name = expect(Tok::Ident, "a name after 'matrix'");
    need_ring(name);
    cmd.bind = fresh_name(name);
    expect(Tok::Equal, "'='");
    cmd.rows = matrix_literal();
    finish(cmd);
    bound_[cmd.bind] = ObjKind::Matrix;
    cmd.text = "matrix " + cmd.bind + " = " + format_poly_rows(cmd.rows);
    return cmd;
  }

  SessionCommand one_name_action(SessionCommand& cmd, Verb verb,
                                 const std::string& spelled,
                                 std::optional<ObjKind> want) {
    cmd.verb = verb;
    need_ring(lx_.peek());
    if (want) {
      cmd.names.push_back(used_name(*want));
    } else {
      Token t = expect(Tok::Ident, "a name");
      if (!bound_.count(t.text)) fail(t, "name '" + t.text + "' is not bound");
      cmd.names.push_back(t.text);
    }
    finish(cmd);
    cmd.text = spelled + " " + cmd.names[0];
    return cmd;
  }

  SessionCommand residue_stmt(SessionCommand& cmd) {
    cmd.verb = Verb::ResidueReport;
    need_ring(lx_.peek());
    cmd.names.push_back(used_name(ObjKind::Ideal));
    expect(Tok::Arrow, "'->'");
    cmd.names.push_back(used_name(ObjKind::Ideal));
    finish(cmd);
    cmd.text = "residue-report " + cmd.names[0] + " -> " + cmd.names[1];
    return cmd;
  }

  SessionCommand jacobian_stmt(SessionCommand& cmd) {
    cmd.verb = Verb::JacobianTest;
    need_ring(lx_.peek());
    cmd.polys = poly_list();
    finish(cmd);
    cmd.text = "jacobian-test ";
    for (size_t i = 0; i < cmd.polys.size(); ++i) {
      if (i) cmd.text += ", ";
      cmd.text += format_polynomial(cmd.polys[i]);
    }
    return cmd;
  }

  SessionCommand binding_stmt(SessionCommand& cmd, const std::string& bind) {
    Token vt;
    std::string verb = read_verb_word(vt);
    need_ring(vt);
    cmd.bind = bind;
    if (verb == "res") {
      cmd.verb = Verb::Res;
      cmd.names.push_back(used_name(ObjKind::Ideal));
      if (lx_.peek().kind == Tok::Comma) {
        lx_.next();
        Token n = expect(Tok::Int, "an integer bound");
        cmd.number = parse_small_int(n);
      }
      finish(cmd);
      bound_[bind] = ObjKind::Complex;
      cmd.text = bind + " = res " + cmd.names[0] +
                 (cmd.number >= 0 ? ", " + std::to_string(cmd.number) : "");
    } else if (verb == "koszul") {
      cmd.verb = Verb::Koszul;
      cmd.names.push_back(used_name(ObjKind::Ideal));
      finish(cmd);
      bound_[bind] = ObjKind::Complex;
      cmd.text = bind + " = koszul " + cmd.names[0];
    } else if (verb == "lift") {
      cmd.verb = Verb::Lift;
      cmd.names.push_back(used_name(ObjKind::Complex));
      expect(Tok::Arrow, "'->'");
      cmd.names.push_back(used_name(ObjKind::Complex));
      if (lx_.peek().kind == Tok::Comma) {
        lx_.next();
        cmd.names.push_back(used_name(ObjKind::Matrix));
      }
      finish(cmd);
      bound_[bind] = ObjKind::ChainMap;
      cmd.text = bind + " = lift " + cmd.names[0] + " -> " + cmd.names[1] +
                 (cmd.names.size() == 3 ? ", " + cmd.names[2] : "");
    } else if (verb == "homotopy") {
      cmd.verb = Verb::Homotopy;
      cmd.names.push_back(used_name(ObjKind::ChainMap));
      expect(Tok::Comma, "','");
      cmd.names.push_back(used_name(ObjKind::ChainMap));
      finish(cmd);
      bound_[bind] = ObjKind::Homotopy;
      cmd.text = bind + " = homotopy " + cmd.names[0] + ", " + cmd.names[1];
    } else if (verb == "fitting") {
      cmd.verb = Verb::Fitting;
      cmd.names.push_back(used_name(ObjKind::Complex));
      expect(Tok::Comma, "','");
      Token n = expect(Tok::Int, "an integer index");
      cmd.number = parse_small_int(n);
      finish(cmd);
      bound_[bind] = ObjKind::Ideal;
      cmd.text = bind + " = fitting " + cmd.names[0] + ", " + std::to_string(cmd.number);
    } else {
      fail(vt, "unknown verb '" + verb + "'");
    }
    return cmd;
  }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring) {
  if (!ring) throw DomainError("null ring");
  Lexer lx(text);
  ExprParser ep(lx, ring);
  Polynomial p = ep.expr();
  const Token& t = lx.peek();
  if (t.kind != Tok::End) throw ParseError("unexpected trailing input", t.line, t.col);
  return p;
}

Session parse_session(const std::string& text, const MonomialOrder& order) {
  SessionParser sp(text, order);
  Session s = sp.run();
  for (const SessionCommand& c : s.commands)
    if (c.verb != Verb::Ring && !s.ring)
      throw ParseError("ring must be declared first", c.line, c.col);
  return s;
}

}  // namespace reslift
