#ifndef TTOWER_CURVE_HPP
#define TTOWER_CURVE_HPP

#include <string>

#include "ttower/int_util.hpp"

namespace ttower {

// elliptic curve over Q in long Weierstrass form; invariants are derived at
// construction and nonsingularity is enforced
struct Curve {
    Rat a1, a2, a3, a4, a6;
    std::string label;

    Rat b2, b4, b6, b8, c4, c6;
    Rat disc, j;
};

Curve make_curve(const Rat& a1, const Rat& a2, const Rat& a3, const Rat& a4, const Rat& a6,
                 const std::string& label = "");
Curve make_short_curve(const Rat& A, const Rat& B, const std::string& label = "");

// j = 0 -> y^2 = x^3 + 1; j = 1728 -> y^2 = x^3 + x; otherwise the standard
// one-parameter model with a4 = 3j(1728-j), a6 = 2j(1728-j)^2
Curve curve_from_j(const Rat& j);

// short-model twist (a,b) -> (a d^2, b d^3) after completing the square
Curve quadratic_twist(const Curve& E, const Int& d);

// integral short model Y^2 = X^3 + A X + B with the affine x-map X = sx*x + tx;
// used by division polynomials and reductions mod q
struct ShortModel {
    Int A, B;
    Rat sx, tx;
    Int disc; // -16(4A^3+27B^2), nonzero
};

ShortModel short_model(const Curve& E);

// good odd primes for the short model (q not dividing 6*disc)
bool good_reduction_short(const ShortModel& M, std::uint64_t q);

} // namespace ttower

#endif
