#include "reslift/format.hpp"

namespace reslift {

std::string format_monomial(const PolyRing& ring, const Monomial& m) {
  std::string s;
  for (int i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += ring.var(i);
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

std::string format_polynomial(const Polynomial& p) {
  if (p.is_zero()) return "0";
  const PolyRing& ring = *p.ring();
  std::string s;
  bool first = true;
  for (const Term& t : p.terms()) {
    Rational c = t.second;
    if (first) {
      if (c.sign() < 0) {
        s += '-';
        c = -c;
      }
      first = false;
    } else {
      s += c.sign() < 0 ? " - " : " + ";
      if (c.sign() < 0) c = -c;
    }
    bool unit_mon = t.first.is_one();
    if (!c.is_one() || unit_mon) {
      s += c.str();
      if (!unit_mon) s += '*';
    }
    if (!unit_mon) s += format_monomial(ring, t.first);
  }
  return s;
}

std::string format_poly_rows(const std::vector<std::vector<Polynomial>>& rows) {
  std::string s = "[";
  for (size_t i = 0; i < rows.size(); ++i) {
    if (i) s += ", ";
    s += '[';
    for (size_t j = 0; j < rows[i].size(); ++j) {
      if (j) s += ", ";
      s += format_polynomial(rows[i][j]);
    }
    s += ']';
  }
  s += ']';
  return s;
}

std::string format_poly_list(const std::vector<Polynomial>& gens) {
  std::string s = "(";
  for (size_t i = 0; i < gens.size(); ++i) {
    if (i) s += ", ";
    s += format_polynomial(gens[i]);
  }
  s += ')';
  return s;
}

}  // namespace reslift
