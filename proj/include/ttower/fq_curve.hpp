#ifndef TTOWER_FQ_CURVE_HPP
#define TTOWER_FQ_CURVE_HPP

#include <vector>

#include "ttower/curve.hpp"
#include "ttower/ec_point.hpp"
#include "ttower/number_field.hpp"

namespace ttower {

// field-op bundles for the generic point arithmetic
struct FqOps {
    std::uint64_t q;
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return add_mod(a, b, q); }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return sub_mod(a, b, q); }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return mul_mod(a, b, q); }
    std::uint64_t div(std::uint64_t a, std::uint64_t b) const { return mul_mod(a, inv_mod(b, q), q); }
    std::uint64_t neg(std::uint64_t a) const { return a ? q - a : 0; }
    std::uint64_t from_int(long v) const {
        long r = v % static_cast<long>(q);
        if (r < 0) r += q;
        return static_cast<std::uint64_t>(r);
    }
    bool is_zero(std::uint64_t a) const { return a == 0; }
    bool eq(std::uint64_t a, std::uint64_t b) const { return a == b; }
};

struct RatOps {
    Rat add(const Rat& a, const Rat& b) const { return a + b; }
    Rat sub(const Rat& a, const Rat& b) const { return a - b; }
    Rat mul(const Rat& a, const Rat& b) const { return a * b; }
    Rat div(const Rat& a, const Rat& b) const { return a / b; }
    Rat neg(const Rat& a) const { return -a; }
    Rat from_int(long v) const { return Rat(v); }
    bool is_zero(const Rat& a) const { return a == 0; }
    bool eq(const Rat& a, const Rat& b) const { return a == b; }
};

struct NFOps {
    const NumberField* F;
    NFElem add(const NFElem& a, const NFElem& b) const { return nf_add(*F, a, b); }
    NFElem sub(const NFElem& a, const NFElem& b) const { return nf_sub(*F, a, b); }
    NFElem mul(const NFElem& a, const NFElem& b) const { return nf_mul(*F, a, b); }
    NFElem div(const NFElem& a, const NFElem& b) const { return nf_div(*F, a, b); }
    NFElem neg(const NFElem& a) const { return nf_neg(*F, a); }
    NFElem from_int(long v) const { return nf_from_rat(*F, Rat(v)); }
    bool is_zero(const NFElem& a) const { return a.is_zero(); }
    bool eq(const NFElem& a, const NFElem& b) const { return a.rep == b.rep; }
};

ECGroup<Rat, RatOps> ec_group_q(const Curve& E);
ECGroup<NFElem, NFOps> ec_group_nf(const Curve& E, const NumberField& F);

// reduction of E mod an odd prime of good reduction (denominators invertible)
struct CurveFq {
    std::uint64_t q;
    std::uint64_t a1, a2, a3, a4, a6;
};

bool reducible_mod(const Curve& E, std::uint64_t q);   // denominators invertible
bool good_reduction(const Curve& E, std::uint64_t q);  // reducible and disc != 0 mod q
CurveFq reduce_curve(const Curve& E, std::uint64_t q);
ECGroup<std::uint64_t, FqOps> ec_group_fq(const CurveFq& C);

// all points of the reduced curve; q is expected to be small (oracle use)
std::vector<ECPoint<std::uint64_t>> enumerate_over_Fq(const CurveFq& C);

// #E(F_q) by character-sum counting (no enumeration of y)
std::uint64_t point_count_Fq(const CurveFq& C);

} // namespace ttower

#endif
