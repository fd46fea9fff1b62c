#include "ttower/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace ttower {

static RationalPoly cyclotomic_poly_uncached(std::uint64_t m) {
    if (m == 0) throw std::domain_error("cyclotomic_poly: m >= 1 required");
    if (m == 1) return RationalPoly::from_ints({-1, 1});
    auto fac = factorize_u64(m);
    if (fac.size() == 1) {
        auto [p, k] = *fac.begin();
        // Phi_{p^k}(x) = Phi_p(x^{p^{k-1}})
        RationalPoly phi_p;
        phi_p.c.assign(p, Rat(1));
        if (k == 1) return phi_p;
        std::uint64_t step = 1;
        for (unsigned i = 1; i < k; ++i) step *= p;
        RationalPoly r;
        r.c.assign((p - 1) * step + 1, Rat(0));
        for (std::uint64_t i = 0; i < p; ++i) r.c[i * step] = 1;
        return r;
    }
    // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d
    RationalPoly num;
    num.c.assign(m + 1, Rat(0));
    num.c[0] = -1;
    num.c[m] = 1;
    for (std::uint64_t d : divisors_u64(m)) {
        if (d == m) continue;
        num = rp_quo_exact(num, cyclotomic_poly(d));
    }
    return num;
}

RationalPoly cyclotomic_poly(std::uint64_t m) {
    static std::map<std::uint64_t, RationalPoly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    // release the lock is not needed: recursion re-enters through this path only
    // for proper divisors, so compute outside the map access would deadlock;
    // use recursive computation guarded by the same mutex via plain recursion
    mu.unlock();
    RationalPoly r = cyclotomic_poly_uncached(m);
    mu.lock();
    cache.emplace(m, r);
    return r;
}

const CycloField& CycloField::get(std::uint64_t m) {
    static std::map<std::uint64_t, CycloField> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it == cache.end()) {
        mu.unlock();
        CycloField f;
        f.m = m;
        f.phi = cyclotomic_poly(m);
        f.degree = static_cast<unsigned>(euler_phi_u64(m));
        mu.lock();
        it = cache.emplace(m, std::move(f)).first;
    }
    return it->second;
}

static void check_same_field(const CycloElement& a, const CycloElement& b) {
    if (a.m != b.m) throw std::invalid_argument("CycloElement: conductor mismatch");
}

CycloElement ce_from_rat(std::uint64_t m, const Rat& v) { return {m, rp_const(v)}; }

CycloElement ce_zeta(std::uint64_t m) { return ce_zeta_pow(m, 1); }

CycloElement ce_zeta_pow(std::uint64_t m, std::uint64_t e) {
    const CycloField& F = CycloField::get(m);
    e %= m;
    RationalPoly x = rp_xpow(static_cast<std::size_t>(e));
    return {m, rp_rem(x, F.phi)};
}

CycloElement ce_add(const CycloElement& a, const CycloElement& b) {
    check_same_field(a, b);
    return {a.m, rp_add(a.rep, b.rep)};
}

CycloElement ce_sub(const CycloElement& a, const CycloElement& b) {
    check_same_field(a, b);
    return {a.m, rp_sub(a.rep, b.rep)};
}

CycloElement ce_mul(const CycloElement& a, const CycloElement& b) {
    check_same_field(a, b);
    const CycloField& F = CycloField::get(a.m);
    return {a.m, rp_rem(rp_mul(a.rep, b.rep), F.phi)};
}

CycloElement ce_neg(const CycloElement& a) { return {a.m, rp_neg(a.rep)}; }

CycloElement ce_inv(const CycloElement& a) {
    if (a.is_zero()) throw std::domain_error("ce_inv: zero");
    const CycloField& F = CycloField::get(a.m);
    // extended euclid over Q[x]: s*rep + t*phi = gcd = const
    RationalPoly r0 = a.rep, r1 = F.phi;
    RationalPoly s0 = rp_const(Rat(1)), s1;
    while (!r1.is_zero()) {
        RationalPoly q, r;
        rp_divrem(r0, r1, q, r);
        RationalPoly s2 = rp_sub(s0, rp_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.degree() != 0) throw std::domain_error("ce_inv: not invertible (zero divisor?)");
    return {a.m, rp_rem(rp_scale(s0, 1 / r0.c[0]), F.phi)};
}

CycloElement ce_eval_poly(const RationalPoly& f, const CycloElement& a) {
    CycloElement r = ce_from_rat(a.m, Rat(0));
    for (std::size_t i = f.c.size(); i-- > 0;) {
        r = ce_mul(r, a);
        r = ce_add(r, ce_from_rat(a.m, f.c[i]));
    }
    return r;
}

CycloElement automorphism(std::uint64_t c, const CycloElement& a) {
    c %= a.m;
    if (gcd_u64(c, a.m) != 1) throw std::invalid_argument("automorphism: c not coprime to conductor");
    const CycloField& F = CycloField::get(a.m);
    RationalPoly img;
    img.c.assign(a.m, Rat(0));
    for (std::size_t i = 0; i < a.rep.c.size(); ++i) {
        if (a.rep.c[i] == 0) continue;
        img.c[(i * c) % a.m] += a.rep.c[i];
    }
    img.normalize();
    return {a.m, rp_rem(img, F.phi)};
}

CycloElement ce_embed(const CycloElement& a, std::uint64_t M) {
    if (M % a.m != 0) throw std::invalid_argument("ce_embed: conductor does not divide target");
    if (M == a.m) return a;
    std::uint64_t k = M / a.m; // zeta_m = zeta_M^k
    const CycloField& F = CycloField::get(M);
    RationalPoly img;
    img.c.assign(static_cast<std::size_t>(a.rep.degree() < 0 ? 0 : a.rep.degree()) * k + 1, Rat(0));
    for (std::size_t i = 0; i < a.rep.c.size(); ++i) {
        if (a.rep.c[i] == 0) continue;
        img.c[i * k] += a.rep.c[i];
    }
    img.normalize();
    return {M, rp_rem(img, F.phi)};
}

} // namespace ttower
