#include "reslift/order.hpp"

#include <cstdlib>

#include "reslift/errors.hpp"

namespace reslift {

MonomialOrder MonomialOrder::wgrevlex(std::vector<long> weights) {
  if (weights.empty()) throw DomainError("wgrevlex needs at least one weight");
  for (long w : weights)
    if (w <= 0) throw DomainError("wgrevlex weights must be positive");
  return MonomialOrder(OrderKind::WGrevlex, std::move(weights));
}

long MonomialOrder::weighted_degree(const Monomial& m) const {
  if (kind_ != OrderKind::WGrevlex) return m.total_degree();
  long d = 0;
  for (int i = 0; i < m.nvars(); ++i) d += weights_[i] * m[i];
  return d;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.nvars() != b.nvars()) throw DomainError("monomials from different rings");
  switch (kind_) {
    case OrderKind::Lex: {
      for (int i = 0; i < a.nvars(); ++i) {
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      }
      return 0;
    }
    case OrderKind::WGrevlex:
      if (static_cast<int>(weights_.size()) != a.nvars())
        throw DomainError("weight vector length does not match variable count");
      [[fallthrough]];
    case OrderKind::Grevlex: {
      long da = weighted_degree(a), db = weighted_degree(b);
      if (da != db) return da > db ? 1 : -1;
      // Graded tie-break: the last variable where they differ decides, the
      // SMALLER exponent there winning.
      for (int i = a.nvars() - 1; i >= 0; --i) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
      }
      return 0;
    }
  }
  throw InternalError("unhandled order kind");
}

std::string MonomialOrder::str() const {
  switch (kind_) {
    case OrderKind::Lex: return "lex";
    case OrderKind::Grevlex: return "grevlex";
    case OrderKind::WGrevlex: {
      std::string s = "wgrevlex:";
      for (size_t i = 0; i < weights_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(weights_[i]);
      }
      return s;
    }
  }
  throw InternalError("unhandled order kind");
}

MonomialOrder MonomialOrder::from_string(const std::string& s) {
  if (s == "lex") return lex();
  if (s == "grevlex") return grevlex();
  const std::string prefix = "wgrevlex:";
  if (s.rfind(prefix, 0) == 0) {
    std::vector<long> w;
    std::string rest = s.substr(prefix.size());
    size_t pos = 0;
    while (pos <= rest.size()) {
      size_t comma = rest.find(',', pos);
      std::string tok = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      if (tok.empty()) throw DomainError("malformed weight list '" + s + "'");
      char* end = nullptr;
      long v = std::strtol(tok.c_str(), &end, 10);
      if (end == nullptr || *end != '\0') throw DomainError("malformed weight '" + tok + "'");
      w.push_back(v);
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    return wgrevlex(std::move(w));
  }
  throw DomainError("unknown monomial order '" + s + "'");
}

}  // namespace reslift
