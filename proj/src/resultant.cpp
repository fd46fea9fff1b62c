#include "ttower/resultant.hpp"

#include <stdexcept>

#include "ttower/mod_poly.hpp"

namespace ttower {

static std::uint64_t resultant_mod(ModPoly a, ModPoly b) {
    std::uint64_t q = a.q;
    if (a.is_zero() || b.is_zero()) return 0;
    std::uint64_t acc = 1;
    bool neg = false;
    while (b.degree() > 0) {
        ModPoly r = mp_rem(a, b);
        long drop = a.degree() - (r.is_zero() ? 0 : r.degree());
        if (r.is_zero()) return 0;
        acc = mul_mod(acc, pow_mod(b.lc(), static_cast<std::uint64_t>(drop), q), q);
        if ((a.degree() & 1) && (b.degree() & 1)) neg = !neg;
        a = std::move(b);
        b = std::move(r);
    }
    // b is a nonzero constant
    acc = mul_mod(acc, pow_mod(b.lc(), static_cast<std::uint64_t>(a.degree()), q), q);
    return neg ? (q - acc) % q : acc;
}

Int resultant_int(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) return 0;
    if (f.degree() == 0) return pow_int(f.c[0], static_cast<unsigned long>(g.degree()));
    if (g.degree() == 0) return pow_int(g.c[0], static_cast<unsigned long>(f.degree()));
    // Hadamard-style bound: |res| <= ||f||2^deg g * ||g||2^deg f
    Int bound = pow_int(ip_norm2_ceil(f), static_cast<unsigned long>(g.degree())) *
                pow_int(ip_norm2_ceil(g), static_cast<unsigned long>(f.degree()));
    Int target = 2 * bound + 1;
    Int prod(1), acc(0);
    std::uint64_t p = (1ull << 61);
    while (prod < target) {
        p = next_prime_u64(p);
        if (int_mod(f.lc(), p) == 0 || int_mod(g.lc(), p) == 0) continue;
        std::uint64_t r = resultant_mod(ip_to_mod(f, p), ip_to_mod(g, p));
        // CRT combine acc (mod prod) with r (mod p)
        Int P(static_cast<unsigned long>(p));
        Int inv;
        Int pm = prod % P;
        mpz_invert(inv.get_mpz_t(), pm.get_mpz_t(), P.get_mpz_t());
        Int diff = (Int(static_cast<unsigned long>(r)) - acc % P) % P;
        if (diff < 0) diff += P;
        acc += prod * ((diff * inv) % P);
        prod *= P;
    }
    // symmetric lift
    if (acc > prod / 2) acc -= prod;
    return acc;
}

Rat resultant(const RationalPoly& f, const RationalPoly& g) {
    if (f.is_zero() || g.is_zero()) return Rat(0);
    auto [cf, F] = rp_to_int(f);
    auto [cg, G] = rp_to_int(g);
    Rat scale(1);
    // res(c*F, G) = c^{deg G} res(F, G)
    for (long i = 0; i < std::max(0L, g.degree()); ++i) scale *= cf;
    for (long i = 0; i < std::max(0L, f.degree()); ++i) scale *= cg;
    Rat r = scale * Rat(resultant_int(F, G));
    r.canonicalize();
    return r;
}

RationalPoly resultant_bivariate_in_t(const IntPoly& h, const std::vector<IntPoly>& tc) {
    long dt = static_cast<long>(tc.size()) - 1;
    while (dt >= 0 && tc[dt].is_zero()) --dt;
    if (dt < 0) return {};
    long dy = 0;
    for (long i = 0; i <= dt; ++i) dy = std::max(dy, tc[i].is_zero() ? 0 : tc[i].degree());
    // degree of the resultant in t is at most deg(h) * dt
    long npoints = static_cast<long>(h.degree()) * dt + 1;
    long D = npoints - 1;
    std::vector<Int> vals;
    vals.reserve(npoints);
    for (long j = 0; j < npoints; ++j) {
        // specialize t = j
        IntPoly fy;
        Int tj(1);
        for (long i = 0; i <= dt; ++i) {
            fy = ip_add(fy, ip_scale(tc[i], tj));
            tj *= j;
        }
        // the y-leading coefficient must not drop (constant in t by contract)
        vals.push_back(resultant_int(h, fy));
    }
    // exact integer interpolation at the nodes 0..D via forward differences:
    // P(t) = sum_k delta^k v_0 * binom(t, k); assemble N = D! * P in Z[t] and
    // divide out D! at the end (P has integer coefficients)
    std::vector<Int> delta = vals;
    std::vector<Int> lead(npoints); // delta^k v_0
    lead[0] = delta[0];
    for (long k = 1; k < npoints; ++k) {
        for (long j = npoints - 1; j >= k; --j) delta[j] -= delta[j - 1];
        lead[k] = delta[k];
    }
    Int dfact(1);
    for (long k = 2; k <= D; ++k) dfact *= k;
    IntPoly N;                       // accumulates D! * P
    IntPoly falling({Int(1)});       // (t)_k
    Int scale = dfact;               // D!/k!
    for (long k = 0; k <= D; ++k) {
        if (lead[k] != 0) N = ip_add(N, ip_scale(falling, lead[k] * scale));
        if (k < D) {
            // (t)_{k+1} = (t)_k * (t - k)
            IntPoly lin({Int(-k), Int(1)});
            falling = ip_mul(falling, lin);
            scale /= (k + 1);
        }
    }
    RationalPoly poly;
    poly.c.reserve(N.c.size());
    for (const auto& v : N.c) {
        Int quo, rem;
        mpz_tdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), v.get_mpz_t(), dfact.get_mpz_t());
        if (rem != 0) throw std::logic_error("resultant interpolation: non-integer coefficient");
        poly.c.emplace_back(quo);
    }
    poly.normalize();
    return poly;
}

RationalPoly trager_norm(const RationalPoly& f, const IntPoly& h, long s) {
    // F(t,y) = f(t - s*y): expand binomially.
    // f = sum_k a_k x^k; x^k = (t - s y)^k = sum_i C(k,i) t^i (-s y)^{k-i}
    long n = f.degree();
    if (n < 0) return {};
    auto [cf, F] = rp_to_int(f);
    std::vector<IntPoly> tc(n + 1); // coefficient of t^i as poly in y
    for (long k = 0; k <= n; ++k) {
        if (F.coeff(k) == 0) continue;
        Int binom(1);
        for (long i = 0; i <= k; ++i) {
            // contribution to t^i: a_k * C(k,i) * (-s)^(k-i) * y^(k-i)
            Int co = F.coeff(k) * binom * pow_int(Int(-s), static_cast<unsigned long>(k - i));
            if (tc[i].c.size() < static_cast<std::size_t>(k - i + 1)) tc[i].c.resize(k - i + 1, Int(0));
            tc[i].c[k - i] += co;
            // C(k, i+1) = C(k,i) * (k-i)/(i+1)
            binom = binom * (k - i) / (i + 1);
        }
    }
    for (auto& p : tc) p.normalize();
    RationalPoly norm = resultant_bivariate_in_t(h, tc);
    // scale back: norm of cf * (...) multiplies by cf^deg h; callers only use
    // factor structure, but keep it exact anyway
    Rat scale(1);
    for (long i = 0; i < h.degree(); ++i) scale *= cf;
    return rp_scale(norm, scale);
}

} // namespace ttower
