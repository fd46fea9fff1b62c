#ifndef TTOWER_CYCLOTOMIC_HPP
#define TTOWER_CYCLOTOMIC_HPP

#include <cstdint>

#include "ttower/rat_poly.hpp"

namespace ttower {

// exact m-th cyclotomic polynomial
RationalPoly cyclotomic_poly(std::uint64_t m);

// Q(zeta_m): conductor, defining polynomial Phi_m, degree phi(m)
struct CycloField {
    std::uint64_t m = 1;
    RationalPoly phi;
    unsigned degree = 1;

    static const CycloField& get(std::uint64_t m); // cached registry
};

// residue mod Phi_m, degree < phi(m)
struct CycloElement {
    std::uint64_t m = 1;
    RationalPoly rep;

    bool is_zero() const { return rep.is_zero(); }
    bool operator==(const CycloElement& o) const { return m == o.m && rep == o.rep; }
};

CycloElement ce_from_rat(std::uint64_t m, const Rat& v);
CycloElement ce_zeta(std::uint64_t m); // the class of x
CycloElement ce_zeta_pow(std::uint64_t m, std::uint64_t e);
CycloElement ce_add(const CycloElement& a, const CycloElement& b);
CycloElement ce_sub(const CycloElement& a, const CycloElement& b);
CycloElement ce_mul(const CycloElement& a, const CycloElement& b);
CycloElement ce_neg(const CycloElement& a);
CycloElement ce_inv(const CycloElement& a);
// evaluate a rational polynomial at a field element
CycloElement ce_eval_poly(const RationalPoly& f, const CycloElement& a);

// image of a under zeta_m -> zeta_m^c; requires gcd(c, m) = 1
CycloElement automorphism(std::uint64_t c, const CycloElement& a);

// embed an element of Q(zeta_m) into Q(zeta_M), m | M
CycloElement ce_embed(const CycloElement& a, std::uint64_t M);

} // namespace ttower

#endif
