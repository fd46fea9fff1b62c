#ifndef TTOWER_DIVISION_POLY_HPP
#define TTOWER_DIVISION_POLY_HPP

#include "ttower/curve.hpp"
#include "ttower/mod_poly.hpp"
#include "ttower/rat_poly.hpp"

namespace ttower {

// x-only division polynomials on an integral short model Y^2 = X^3 + AX + B:
// psi_n = f_n(x) for odd n and psi_n = 2y * f_n(x) for even n. For odd n,
// deg f_n = (n^2-1)/2 with leading coefficient n.
IntPoly division_poly_x(const ShortModel& M, long n);

// the x-only object whose roots are exactly the x-coordinates of points
// P != O with nP = O: f_n for odd n, (x^3+Ax+B) * f_n for even n
IntPoly division_root_poly(const ShortModel& M, long n);

// roots = x-coordinates of points of exact order m, m = ell^a a prime power
IntPoly primitive_division_poly(const ShortModel& M, long m);

// the same three objects computed entirely mod q (q odd, good reduction);
// the recurrence never materializes the polynomial over Q
ModPoly division_poly_x_mod(const ShortModel& M, long n, std::uint64_t q);
ModPoly division_root_poly_mod(const ShortModel& M, long n, std::uint64_t q);
ModPoly primitive_division_poly_mod(const ShortModel& M, long m, std::uint64_t q);

// multiplication-by-n on x: x(nP) = num(x)/den(x)
void x_multiplication_map(const ShortModel& M, long n, IntPoly& num, IntPoly& den);

} // namespace ttower

#endif
