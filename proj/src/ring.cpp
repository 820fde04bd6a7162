#include "reslift/ring.hpp"

#include <cctype>
#include <set>

#include "reslift/errors.hpp"

namespace reslift {

namespace {
bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}
}  // namespace

PolyRing::PolyRing(std::vector<std::string> vars, MonomialOrder order)
    : vars_(std::move(vars)), order_(std::move(order)) {
  if (vars_.empty()) throw DomainError("a ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (!valid_identifier(v)) throw DomainError("bad variable name '" + v + "'");
    if (!seen.insert(v).second) throw DomainError("duplicate variable '" + v + "'");
  }
  if (order_.kind() == OrderKind::WGrevlex &&
      order_.weights().size() != vars_.size())
    throw DomainError("weight vector length does not match variable count");
}

int PolyRing::find_var(const std::string& name) const {
  for (size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return static_cast<int>(i);
  return -1;
}

std::string PolyRing::str() const {
  std::string s = "QQ[";
  for (size_t i = 0; i < vars_.size(); ++i) {
    if (i) s += ", ";
    s += vars_[i];
  }
  s += "] ";
  s += order_.str();
  return s;
}

RingPtr make_ring(std::vector<std::string> vars, MonomialOrder order) {
  return std::make_shared<const PolyRing>(std::move(vars), std::move(order));
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!same_ring(a, b)) throw DomainError("ring mismatch");
}

}  // namespace reslift
