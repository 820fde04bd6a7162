#ifndef RESLIFT_RING_HPP
#define RESLIFT_RING_HPP

#include <memory>
#include <string>
#include <vector>

#include "reslift/order.hpp"

namespace reslift {

// QQ[x_1, ..., x_n] together with its ambient monomial order.  Rings are
// immutable and shared; two rings interoperate iff they compare equal by
// value (same variable names in the same positions, same order).
class PolyRing {
 public:
  PolyRing(std::vector<std::string> vars, MonomialOrder order);

  int nvars() const { return static_cast<int>(vars_.size()); }
  const std::string& var(int i) const { return vars_[i]; }
  const std::vector<std::string>& vars() const { return vars_; }
  int find_var(const std::string& name) const;  // -1 when absent
  const MonomialOrder& order() const { return order_; }

  bool operator==(const PolyRing& o) const {
    return vars_ == o.vars_ && order_ == o.order_;
  }
  bool operator!=(const PolyRing& o) const { return !(*this == o); }

  std::string str() const;  // "QQ[x, y, z] grevlex"

 private:
  std::vector<std::string> vars_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(std::vector<std::string> vars,
                  MonomialOrder order = MonomialOrder::grevlex());

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

// Throws DomainError unless the two rings agree.
void require_same_ring(const RingPtr& a, const RingPtr& b);

}  // namespace reslift

#endif
