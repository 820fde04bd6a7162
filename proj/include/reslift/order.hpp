#ifndef RESLIFT_ORDER_HPP
#define RESLIFT_ORDER_HPP

#include <string>
#include <vector>

#include "reslift/monomial.hpp"

namespace reslift {

enum class OrderKind { Lex, Grevlex, WGrevlex };

// Global monomial order: lex, graded reverse lex, or weighted graded reverse
// lex with strictly positive integer weights (the tie-break is the plain
// reverse-lex rule in all graded cases).
class MonomialOrder {
 public:
  static MonomialOrder lex() { return MonomialOrder(OrderKind::Lex, {}); }
  static MonomialOrder grevlex() { return MonomialOrder(OrderKind::Grevlex, {}); }
  static MonomialOrder wgrevlex(std::vector<long> weights);

  OrderKind kind() const { return kind_; }
  const std::vector<long>& weights() const { return weights_; }

  // -1, 0, +1 as a <, =, > b.  Both monomials must have the same nvars (and
  // match weights().size() for WGrevlex).
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  long weighted_degree(const Monomial& m) const;

  bool operator==(const MonomialOrder& o) const {
    return kind_ == o.kind_ && weights_ == o.weights_;
  }
  bool operator!=(const MonomialOrder& o) const { return !(*this == o); }

  // "lex", "grevlex", "wgrevlex:3,4,5" — the same spelling the CLI accepts.
  std::string str() const;
  static MonomialOrder from_string(const std::string& s);

 private:
  MonomialOrder(OrderKind k, std::vector<long> w) : kind_(k), weights_(std::move(w)) {}
  OrderKind kind_;
  std::vector<long> weights_;
};

}  // namespace reslift

#endif
