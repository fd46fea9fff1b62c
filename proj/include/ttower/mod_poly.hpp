#ifndef TTOWER_MOD_POLY_HPP
#define TTOWER_MOD_POLY_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ttower/int_util.hpp"

namespace ttower {

// Dense univariate polynomial over Z/q, coefficients lowest degree first,
// normalized so the leading coefficient is nonzero. The zero polynomial has
// an empty coefficient vector and degree() < 0.
struct ModPoly {
    std::uint64_t q = 0;
    std::vector<std::uint64_t> c;

    ModPoly() = default;
    explicit ModPoly(std::uint64_t modulus) : q(modulus) {}
    ModPoly(std::uint64_t modulus, std::vector<std::uint64_t> coeffs);

    void normalize();
    bool is_zero() const { return c.empty(); }
    long degree() const { return static_cast<long>(c.size()) - 1; }
    std::uint64_t lc() const { return c.empty() ? 0 : c.back(); }
    std::uint64_t coeff(std::size_t i) const { return i < c.size() ? c[i] : 0; }

    bool operator==(const ModPoly& o) const { return q == o.q && c == o.c; }

    std::string str() const;
};

// schoolbook < this degree threshold, Karatsuba above (configurable)
extern std::size_t g_karatsuba_threshold;

ModPoly mp_const(std::uint64_t q, std::uint64_t v);
ModPoly mp_x(std::uint64_t q);
// x^n
ModPoly mp_xpow(std::uint64_t q, std::size_t n);

ModPoly mp_add(const ModPoly& a, const ModPoly& b);
ModPoly mp_sub(const ModPoly& a, const ModPoly& b);
ModPoly mp_neg(const ModPoly& a);
ModPoly mp_scale(const ModPoly& a, std::uint64_t s);
ModPoly mp_mul(const ModPoly& a, const ModPoly& b);
ModPoly mp_shift(const ModPoly& a, std::size_t n); // * x^n

// euclidean division: a = q*b + r, deg r < deg b
void mp_divrem(const ModPoly& a, const ModPoly& b, ModPoly& quo, ModPoly& rem);
ModPoly mp_rem(const ModPoly& a, const ModPoly& b);
ModPoly mp_quo_exact(const ModPoly& a, const ModPoly& b); // throws if remainder nonzero

ModPoly mp_monic(const ModPoly& a);
ModPoly mp_gcd(const ModPoly& a, const ModPoly& b); // monic gcd
ModPoly mp_derivative(const ModPoly& a);
std::uint64_t mp_eval(const ModPoly& a, std::uint64_t x);

// base^e mod m by square-and-multiply, remaindering at each step
ModPoly powmod_poly(const ModPoly& base, const Int& e, const ModPoly& m);

ModPoly mp_random(std::uint64_t q, long max_deg, std::mt19937_64& rng);

} // namespace ttower

#endif
