#ifndef TTOWER_RAT_POLY_HPP
#define TTOWER_RAT_POLY_HPP

#include <string>
#include <vector>

#include "ttower/int_util.hpp"
#include "ttower/mod_poly.hpp"

namespace ttower {

// Dense univariate polynomial over Q, coefficients lowest degree first.
// The zero polynomial is the empty coefficient sequence; degree() of zero is
// the sentinel kDegZero, never -1 arithmetic.
struct RationalPoly {
    std::vector<Rat> c;

    static constexpr long kDegZero = -0x40000000;

    RationalPoly() = default;
    explicit RationalPoly(std::vector<Rat> coeffs) : c(std::move(coeffs)) { normalize(); }

    static RationalPoly from_ints(const std::vector<long>& v);

    void normalize();
    bool is_zero() const { return c.empty(); }
    long degree() const { return c.empty() ? kDegZero : static_cast<long>(c.size()) - 1; }
    const Rat& lc() const;
    Rat coeff(std::size_t i) const { return i < c.size() ? c[i] : Rat(0); }

    bool operator==(const RationalPoly& o) const { return c == o.c; }

    std::string str() const;
};

RationalPoly rp_const(const Rat& v);
RationalPoly rp_x();
RationalPoly rp_xpow(std::size_t n);

RationalPoly rp_add(const RationalPoly& a, const RationalPoly& b);
RationalPoly rp_sub(const RationalPoly& a, const RationalPoly& b);
RationalPoly rp_neg(const RationalPoly& a);
RationalPoly rp_scale(const RationalPoly& a, const Rat& s);
RationalPoly rp_mul(const RationalPoly& a, const RationalPoly& b);

void rp_divrem(const RationalPoly& a, const RationalPoly& b, RationalPoly& quo, RationalPoly& rem);
RationalPoly rp_rem(const RationalPoly& a, const RationalPoly& b);
RationalPoly rp_quo_exact(const RationalPoly& a, const RationalPoly& b);

RationalPoly rp_monic(const RationalPoly& a);
RationalPoly rp_gcd(const RationalPoly& a, const RationalPoly& b); // monic
RationalPoly rp_derivative(const RationalPoly& a);
Rat rp_eval(const RationalPoly& a, const Rat& x);
// substitute x -> u*x + v
RationalPoly rp_compose_linear(const RationalPoly& a, const Rat& u, const Rat& v);
// general composition a(b(x))
RationalPoly rp_compose(const RationalPoly& a, const RationalPoly& b);

// reduce mod prime q; throws if a denominator vanishes mod q
ModPoly rp_to_mod(const RationalPoly& a, std::uint64_t q);

// ---- integer polynomials (internal carrier for factorization/resultants) ----

struct IntPoly {
    std::vector<Int> c;

    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : c(std::move(coeffs)) { normalize(); }

    void normalize();
    bool is_zero() const { return c.empty(); }
    long degree() const { return static_cast<long>(c.size()) - 1; }
    const Int& lc() const;
    Int coeff(std::size_t i) const { return i < c.size() ? c[i] : Int(0); }
    bool operator==(const IntPoly& o) const { return c == o.c; }
};

IntPoly ip_add(const IntPoly& a, const IntPoly& b);
IntPoly ip_sub(const IntPoly& a, const IntPoly& b);
IntPoly ip_mul(const IntPoly& a, const IntPoly& b);
IntPoly ip_scale(const IntPoly& a, const Int& s);
IntPoly ip_derivative(const IntPoly& a);
Int ip_eval(const IntPoly& a, const Int& x);
Int ip_content(const IntPoly& a);            // gcd of coefficients, nonnegative
IntPoly ip_primitive(const IntPoly& a);      // a / content, sign normalized to positive lc
ModPoly ip_to_mod(const IntPoly& a, std::uint64_t q);
bool ip_divides(const IntPoly& d, const IntPoly& a); // exact division test over Z

// content * primitive integer polynomial; f = content * prim
struct IntPolyWithContent {
    Rat content;
    IntPoly prim;
};
IntPolyWithContent rp_to_int(const RationalPoly& f);
RationalPoly ip_to_rat(const IntPoly& f);

// 2-norm upper bound as mpz ceil
Int ip_norm2_ceil(const IntPoly& f);

} // namespace ttower

#endif
