#ifndef RESLIFT_FORMAT_HPP
#define RESLIFT_FORMAT_HPP

#include <string>
#include <vector>

#include "reslift/polynomial.hpp"

namespace reslift {

// Canonical text form: terms in decreasing ambient order, explicit '*',
// '^' only for exponents > 1, coefficients as "n" or "n/d".  Examples:
// "y^2 - x*z", "-x + 3", "1/2*w", "0".  Everything emitted here re-parses
// to the identical polynomial.
std::string format_polynomial(const Polynomial& p);

std::string format_monomial(const PolyRing& ring, const Monomial& m);

// "[[a, b], [c, d]]" row-major; every entry in canonical polynomial form.
std::string format_poly_rows(const std::vector<std::vector<Polynomial>>& rows);

// "(g1, g2, ...)"
std::string format_poly_list(const std::vector<Polynomial>& gens);

}  // namespace reslift

#endif
