#include "ttower/fq_curve.hpp"

#include <stdexcept>

namespace ttower {

ECGroup<Rat, RatOps> ec_group_q(const Curve& E) {
    return ECGroup<Rat, RatOps>{RatOps{}, E.a1, E.a2, E.a3, E.a4, E.a6};
}

ECGroup<NFElem, NFOps> ec_group_nf(const Curve& E, const NumberField& F) {
    return ECGroup<NFElem, NFOps>{NFOps{&F},
                                  nf_from_rat(F, E.a1),
                                  nf_from_rat(F, E.a2),
                                  nf_from_rat(F, E.a3),
                                  nf_from_rat(F, E.a4),
                                  nf_from_rat(F, E.a6)};
}

bool reducible_mod(const Curve& E, std::uint64_t q) {
    for (const Rat* a : {&E.a1, &E.a2, &E.a3, &E.a4, &E.a6})
        if (int_mod(a->get_den(), q) == 0) return false;
    return true;
}

bool good_reduction(const Curve& E, std::uint64_t q) {
    if (q < 3 || !is_prime_u64(q) || !reducible_mod(E, q)) return false;
    return rat_mod(E.disc, q) != 0;
}

CurveFq reduce_curve(const Curve& E, std::uint64_t q) {
    if (!good_reduction(E, q)) throw std::domain_error("reduce_curve: bad reduction");
    return CurveFq{q,        rat_mod(E.a1, q), rat_mod(E.a2, q),
                   rat_mod(E.a3, q), rat_mod(E.a4, q), rat_mod(E.a6, q)};
}

ECGroup<std::uint64_t, FqOps> ec_group_fq(const CurveFq& C) {
    return ECGroup<std::uint64_t, FqOps>{FqOps{C.q}, C.a1, C.a2, C.a3, C.a4, C.a6};
}

std::vector<ECPoint<std::uint64_t>> enumerate_over_Fq(const CurveFq& C) {
    std::vector<ECPoint<std::uint64_t>> pts;
    pts.push_back(ECPoint<std::uint64_t>::infinity());
    std::uint64_t q = C.q;
    for (std::uint64_t x = 0; x < q; ++x) {
        // y^2 + (a1 x + a3) y = x^3 + a2 x^2 + a4 x + a6
        std::uint64_t s = add_mod(mul_mod(C.a1, x, q), C.a3, q);
        std::uint64_t rhs = add_mod(
            add_mod(mul_mod(mul_mod(x, x, q), x, q), mul_mod(C.a2, mul_mod(x, x, q), q), q),
            add_mod(mul_mod(C.a4, x, q), C.a6, q), q);
        // complete the square: (2y + s)^2 = 4 rhs + s^2
        std::uint64_t d = add_mod(mul_mod(4 % q, rhs, q), mul_mod(s, s, q), q);
        if (d == 0) {
            std::uint64_t y = mul_mod(sub_mod(0, s, q), inv_mod(2 % q, q), q);
            pts.push_back(ECPoint<std::uint64_t>::affine(x, y));
            continue;
        }
        std::uint64_t leg = pow_mod(d, (q - 1) / 2, q);
        if (leg != 1) continue;
        // sqrt via scan is fine at oracle scale, but use Tonelli only if needed
        for (std::uint64_t t = 0; t < q; ++t) {
            if (mul_mod(t, t, q) == d) {
                for (std::uint64_t u : {t, q - t}) {
                    std::uint64_t y = mul_mod(sub_mod(u, s, q), inv_mod(2 % q, q), q);
                    pts.push_back(ECPoint<std::uint64_t>::affine(x, y));
                    if (t == 0) break;
                }
                break;
            }
        }
    }
    return pts;
}

std::uint64_t point_count_Fq(const CurveFq& C) {
    std::uint64_t q = C.q, n = 1;
    for (std::uint64_t x = 0; x < q; ++x) {
        std::uint64_t s = add_mod(mul_mod(C.a1, x, q), C.a3, q);
        std::uint64_t rhs = add_mod(
            add_mod(mul_mod(mul_mod(x, x, q), x, q), mul_mod(C.a2, mul_mod(x, x, q), q), q),
            add_mod(mul_mod(C.a4, x, q), C.a6, q), q);
        std::uint64_t d = add_mod(mul_mod(4 % q, rhs, q), mul_mod(s, s, q), q);
        if (d == 0)
            n += 1; // one solution: the double root
        else
            n += pow_mod(d, (q - 1) / 2, q) == 1 ? 2 : 0;
    }
    return n;
}

} // namespace ttower
