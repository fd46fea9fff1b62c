#ifndef TTOWER_RESULTANT_HPP
#define TTOWER_RESULTANT_HPP

#include <vector>

#include "ttower/rat_poly.hpp"

namespace ttower {

// exact resultant over Z via CRT of word-size prime resultants (Hadamard bound)
Int resultant_int(const IntPoly& f, const IntPoly& g);

// exact resultant over Q
Rat resultant(const RationalPoly& f, const RationalPoly& g);

// Res_y(h(y), F(t,y)) as a polynomial in t, where F is given by its
// t-coefficients (each a polynomial in y). Requires the y-leading coefficient
// of F to be independent of t (true for all uses here: F = f(t - s*y)).
// Computed by exact interpolation at integer nodes.
RationalPoly resultant_bivariate_in_t(const IntPoly& h, const std::vector<IntPoly>& t_coeffs_in_y);

// convenience: F(t, y) = f(t - s*y); returns Res_y(h(y), f(t - s*y))
RationalPoly trager_norm(const RationalPoly& f, const IntPoly& h, long s);

} // namespace ttower

#endif
