#include "ttower/division_poly.hpp"

#include <map>
#include <stdexcept>

namespace ttower {

namespace {

// generic recurrence over any coefficient carrier
template <class Poly, class Ctx>
struct DivPolyEngine {
    Ctx ctx; // provides: mul, sub, scale_small, base polys f0..f4, R2_16 = 16*(x^3+Ax+B)^2
    std::map<long, Poly> memo;

    const Poly& f(long n) {
        auto it = memo.find(n);
        if (it != memo.end()) return it->second;
        Poly r;
        if (n % 2 == 0) {
            long m = n / 2;
            // f_{2m} = f_m (f_{m+2} f_{m-1}^2 - f_{m-2} f_{m+1}^2)
            Poly t1 = ctx.mul(f(m + 2), ctx.mul(f(m - 1), f(m - 1)));
            Poly t2 = ctx.mul(f(m - 2), ctx.mul(f(m + 1), f(m + 1)));
            r = ctx.mul(f(m), ctx.sub(t1, t2));
        } else {
            long m = (n - 1) / 2;
            Poly c1 = ctx.mul(f(m + 2), ctx.mul(f(m), ctx.mul(f(m), f(m))));
            Poly c2 = ctx.mul(f(m - 1), ctx.mul(f(m + 1), ctx.mul(f(m + 1), f(m + 1))));
            if (m % 2 == 0) {
                // psi_{m+2} psi_m^3 carries (2y)^4 = 16 R^2
                r = ctx.sub(ctx.mul(ctx.R2_16, c1), c2);
            } else {
                r = ctx.sub(c1, ctx.mul(ctx.R2_16, c2));
            }
        }
        return memo.emplace(n, std::move(r)).first->second;
    }
};

struct IntCtx {
    IntPoly R2_16;
    IntPoly mul(const IntPoly& a, const IntPoly& b) const { return ip_mul(a, b); }
    IntPoly sub(const IntPoly& a, const IntPoly& b) const { return ip_sub(a, b); }
};

struct ModCtx {
    ModPoly R2_16;
    ModPoly mul(const ModPoly& a, const ModPoly& b) const { return mp_mul(a, b); }
    ModPoly sub(const ModPoly& a, const ModPoly& b) const { return mp_sub(a, b); }
};

IntPoly base_f_int(const ShortModel& M, long n) {
    const Int& A = M.A;
    const Int& B = M.B;
    switch (n) {
        case 0: return {};
        case 1:
        case 2: return IntPoly({Int(1)});
        case 3: return IntPoly({-A * A, 12 * B, 6 * A, Int(0), Int(3)});
        case 4:
            return ip_scale(IntPoly({-8 * B * B - A * A * A, -4 * A * B, -5 * A * A, 20 * B, 5 * A,
                                     Int(0), Int(1)}),
                            Int(2));
        default: throw std::logic_error("base_f_int: n out of range");
    }
}

IntPoly R_poly(const ShortModel& M) { return IntPoly({M.B, M.A, Int(0), Int(1)}); }

DivPolyEngine<IntPoly, IntCtx> make_int_engine(const ShortModel& M) {
    DivPolyEngine<IntPoly, IntCtx> eng;
    IntPoly R = R_poly(M);
    eng.ctx.R2_16 = ip_scale(ip_mul(R, R), Int(16));
    for (long i = 0; i <= 4; ++i) eng.memo.emplace(i, base_f_int(M, i));
    return eng;
}

DivPolyEngine<ModPoly, ModCtx> make_mod_engine(const ShortModel& M, std::uint64_t q) {
    if (q < 5 || !good_reduction_short(M, q))
        throw std::domain_error("division poly mod q: bad reduction prime");
    DivPolyEngine<ModPoly, ModCtx> eng;
    for (long i = 0; i <= 4; ++i) eng.memo.emplace(i, ip_to_mod(base_f_int(M, i), q));
    ModPoly R = ip_to_mod(R_poly(M), q);
    eng.ctx.R2_16 = mp_scale(mp_mul(R, R), 16 % q);
    return eng;
}

} // namespace

IntPoly division_poly_x(const ShortModel& M, long n) {
    if (n < 1) throw std::invalid_argument("division_poly_x: n >= 1 required");
    auto eng = make_int_engine(M);
    return eng.f(n);
}

IntPoly division_root_poly(const ShortModel& M, long n) {
    IntPoly f = division_poly_x(M, n);
    if (n % 2 == 0) f = ip_mul(f, R_poly(M));
    return f;
}

IntPoly primitive_division_poly(const ShortModel& M, long m) {
    auto fac = factorize_u64(static_cast<std::uint64_t>(m));
    if (fac.size() != 1) throw std::invalid_argument("primitive_division_poly: prime power required");
    long ell = static_cast<long>(fac.begin()->first);
    if (m == ell) return division_root_poly(M, m);
    IntPoly hi = division_root_poly(M, m);
    IntPoly lo = division_root_poly(M, m / ell);
    // lo divides hi exactly; divide over Q and convert back
    RationalPoly quo = rp_quo_exact(ip_to_rat(hi), ip_to_rat(lo));
    return rp_to_int(quo).prim;
}

ModPoly division_poly_x_mod(const ShortModel& M, long n, std::uint64_t q) {
    if (n < 1) throw std::invalid_argument("division_poly_x_mod: n >= 1 required");
    auto eng = make_mod_engine(M, q);
    return eng.f(n);
}

ModPoly division_root_poly_mod(const ShortModel& M, long n, std::uint64_t q) {
    auto eng = make_mod_engine(M, q);
    ModPoly f = eng.f(n);
    if (n % 2 == 0) f = mp_mul(f, ip_to_mod(R_poly(M), q));
    return f;
}

ModPoly primitive_division_poly_mod(const ShortModel& M, long m, std::uint64_t q) {
    auto fac = factorize_u64(static_cast<std::uint64_t>(m));
    if (fac.size() != 1)
        throw std::invalid_argument("primitive_division_poly_mod: prime power required");
    long ell = static_cast<long>(fac.begin()->first);
    if (m == ell) return division_root_poly_mod(M, m, q);
    auto eng = make_mod_engine(M, q);
    ModPoly hi = eng.f(m);
    ModPoly lo = eng.f(m / ell);
    ModPoly R = ip_to_mod(R_poly(M), q);
    if (m % 2 == 0) hi = mp_mul(hi, R);
    if ((m / ell) % 2 == 0) lo = mp_mul(lo, R);
    return mp_quo_exact(hi, lo);
}

void x_multiplication_map(const ShortModel& M, long n, IntPoly& num, IntPoly& den) {
    if (n < 2) throw std::invalid_argument("x_multiplication_map: n >= 2 required");
    auto eng = make_int_engine(M);
    IntPoly fn = eng.f(n), fm = eng.f(n - 1), fp = eng.f(n + 1);
    IntPoly R = R_poly(M);
    IntPoly x({Int(0), Int(1)});
    if (n % 2 == 1) {
        den = ip_mul(fn, fn);
        num = ip_sub(ip_mul(x, den), ip_scale(ip_mul(R, ip_mul(fm, fp)), Int(4)));
    } else {
        IntPoly R4f2 = ip_scale(ip_mul(R, ip_mul(fn, fn)), Int(4));
        den = R4f2;
        num = ip_sub(ip_mul(x, R4f2), ip_mul(fm, fp));
    }
}

} // namespace ttower
