#include "ttower/gaussian_period.hpp"

#include <algorithm>
#include <stdexcept>

#include "ttower/mod_poly.hpp"
#include "ttower/resultant.hpp"

namespace ttower {

NumberField SubfieldPresentation::as_number_field() const {
    if (degree == 1) return NumberField::rationals();
    return make_number_field(rp_to_int(eta_minpoly).prim);
}

namespace {

// element of order m in F_ell^x, ell prime with m | ell - 1
std::uint64_t root_of_unity_mod(std::uint64_t m, std::uint64_t ell) {
    std::uint64_t e = (ell - 1) / m;
    auto mfac = factorize_u64(m);
    for (std::uint64_t g = 2; g < ell; ++g) {
        std::uint64_t w = pow_mod(g, e, ell);
        if (w == 1) continue;
        bool exact = true;
        for (auto& [p, k] : mfac) {
            (void)k;
            if (pow_mod(w, m / p, ell) == 1) { exact = false; break; }
        }
        if (exact) return w;
    }
    throw std::logic_error("root_of_unity_mod: not found");
}

// minimal polynomial of the period by CRT over primes ell = 1 (mod m):
// h mod ell = prod over coset reps t of (x - sum_{c in Delta} w^{tc})
RationalPoly period_minpoly_crt(std::uint64_t m, const std::vector<std::uint64_t>& delta,
                                unsigned degree) {
    // coset representatives of Delta in (Z/m)^x
    std::vector<std::uint64_t> reps;
    std::vector<char> seen(m, 0);
    for (std::uint64_t t = 1; t < m; ++t) {
        if (gcd_u64(t, m) != 1 || seen[t]) continue;
        reps.push_back(t);
        for (std::uint64_t c : delta) seen[(t * c) % m] = 1;
    }
    if (reps.size() != degree) throw std::logic_error("period_minpoly_crt: coset count mismatch");

    // coefficient bound: |e_k({eta_t})| <= C(d, d/2) * |Delta|^d
    Int binom;
    mpz_bin_uiui(binom.get_mpz_t(), degree, degree / 2);
    Int bound = binom * pow_int(Int(static_cast<unsigned long>(delta.size())), degree);
    Int target = 2 * bound + 1;

    Int prod(1);
    std::vector<Int> acc(degree + 1, Int(0));
    std::uint64_t ell = 1ull << 61;
    while (prod < target) {
        // next prime ell = 1 mod m
        do {
            ell = next_prime_u64(ell);
        } while ((ell - 1) % m != 0);
        std::uint64_t w = root_of_unity_mod(m, ell);
        // product of linear factors
        ModPoly h = mp_const(ell, 1);
        for (std::uint64_t t : reps) {
            std::uint64_t eta = 0;
            for (std::uint64_t c : delta) eta = add_mod(eta, pow_mod(w, (t * c) % m, ell), ell);
            ModPoly lin(ell, {sub_mod(0, eta, ell), 1});
            h = mp_mul(h, lin);
        }
        // CRT each coefficient
        Int P(static_cast<unsigned long>(ell));
        Int inv;
        Int pm = prod % P;
        mpz_invert(inv.get_mpz_t(), pm.get_mpz_t(), P.get_mpz_t());
        for (unsigned i = 0; i <= degree; ++i) {
            Int r(static_cast<unsigned long>(h.coeff(i)));
            Int diff = (r - acc[i] % P) % P;
            if (diff < 0) diff += P;
            acc[i] += prod * ((diff * inv) % P);
        }
        prod *= P;
    }
    RationalPoly out;
    out.c.resize(degree + 1);
    for (unsigned i = 0; i <= degree; ++i) {
        Int v = acc[i] % prod;
        if (v > prod / 2) v -= prod;
        out.c[i] = Rat(v);
    }
    out.normalize();
    if (out.degree() != static_cast<long>(degree) || out.lc() != 1)
        throw std::logic_error("period_minpoly_crt: degree/monicity failure");
    return out;
}

SubfieldPresentation build_from_delta(std::uint64_t m, std::vector<std::uint64_t> delta) {
    std::sort(delta.begin(), delta.end());
    SubfieldPresentation sp;
    sp.ambient_m = m;
    sp.delta = delta;
    unsigned phi = static_cast<unsigned>(euler_phi_u64(m));
    if (phi % delta.size() != 0) throw std::invalid_argument("delta size must divide phi(m)");
    sp.degree = phi / static_cast<unsigned>(delta.size());
    CycloElement eta = ce_from_rat(m, Rat(0));
    for (std::uint64_t c : delta) eta = ce_add(eta, ce_zeta_pow(m, c));
    sp.eta = eta;
    sp.eta_minpoly = period_minpoly_crt(m, sp.delta, sp.degree);
    return sp;
}

} // namespace

SubfieldPresentation build_layer_presentation(std::uint64_t p, unsigned n) {
    if (!is_prime_u64(p)) throw std::invalid_argument("build_layer_presentation: p must be prime");
    if (n < 1) throw std::invalid_argument("build_layer_presentation: n >= 1 required");
    if (p == 2) {
        // ambient conductor 2^{n+2}, Delta = {1, -1}
        std::uint64_t m = 1ull << (n + 2);
        return build_from_delta(m, {1, m - 1});
    }
    std::uint64_t m = 1;
    for (unsigned i = 0; i <= n; ++i) m *= p;
    if (m > 1u << 20) throw std::invalid_argument("layer conductor too large for exact presentation");
    // Delta = unique subgroup of order p-1: the (p-1)-torsion of the cyclic unit group
    std::vector<std::uint64_t> delta;
    for (std::uint64_t x = 1; x < m; ++x)
        if (x % p != 0 && pow_mod(x, p - 1, m) == 1) delta.push_back(x);
    if (delta.size() != p - 1) throw std::logic_error("layer Delta has wrong order");
    return build_from_delta(m, std::move(delta));
}

SubfieldPresentation build_cyclo_subfield_presentation(std::uint64_t p, unsigned k, std::uint64_t d) {
    if (!is_prime_u64(p) || p == 2)
        throw std::invalid_argument("build_cyclo_subfield_presentation: odd prime required");
    std::uint64_t m = 1;
    for (unsigned i = 0; i < k; ++i) m *= p;
    std::uint64_t phi = euler_phi_u64(m);
    if (phi % d != 0) throw std::invalid_argument("degree does not divide phi(p^k)");
    std::uint64_t dsize = phi / d;
    // (Z/p^k)^x is cyclic: Delta = the subgroup of order dsize = the dsize-torsion
    std::vector<std::uint64_t> delta;
    for (std::uint64_t x = 1; x < m; ++x)
        if (x % p != 0 && pow_mod(x, dsize, m) == 1) delta.push_back(x);
    if (delta.size() != dsize) throw std::logic_error("cyclo subfield Delta has wrong order");
    return build_from_delta(m, std::move(delta));
}

SubfieldPresentation build_compositum_presentation(const std::vector<SubfieldPresentation>& parts) {
    if (parts.empty()) {
        SubfieldPresentation sp;
        sp.ambient_m = 1;
        sp.delta = {};
        sp.eta = ce_from_rat(1, Rat(1));
        sp.eta_minpoly = RationalPoly::from_ints({-1, 1});
        sp.degree = 1;
        return sp;
    }
    SubfieldPresentation acc = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) {
        const SubfieldPresentation& b = parts[i];
        if (gcd_u64(acc.ambient_m, b.ambient_m) != 1)
            throw std::invalid_argument("compositum parts must have coprime conductors");
        SubfieldPresentation out;
        out.ambient_m = acc.ambient_m * b.ambient_m;
        out.degree = acc.degree * b.degree;
        // Delta of the compositum: CRT products of the two Deltas
        for (std::uint64_t ca : acc.delta.empty() ? std::vector<std::uint64_t>{1} : acc.delta)
            for (std::uint64_t cb : b.delta.empty() ? std::vector<std::uint64_t>{1} : b.delta) {
                // residue x with x = ca mod ma, x = cb mod mb
                std::uint64_t ma = acc.ambient_m, mb = b.ambient_m;
                if (ma == 1) { out.delta.push_back(cb % (ma * mb)); continue; }
                if (mb == 1) { out.delta.push_back(ca % (ma * mb)); continue; }
                std::uint64_t minv = inv_mod(ma % mb, mb);
                std::uint64_t t = mul_mod(sub_mod(cb % mb, ca % mb, mb), minv, mb);
                out.delta.push_back((ca + ma * t) % (ma * mb));
            }
        std::sort(out.delta.begin(), out.delta.end());
        // generator: eta_acc + s * eta_b with s making the resultant squarefree
        IntPoly ha = rp_to_int(acc.eta_minpoly).prim;
        IntPoly hb = rp_to_int(b.eta_minpoly).prim;
        for (long s = 1;; ++s) {
            if (s > 64) throw resource_exhausted("compositum: no squarefree generator found");
            // minpoly candidate: Res_y(ha(y), hb_scaled(t - y)) where the
            // generator is eta_b_scaled + eta_a, eta_b_scaled = s * eta_b.
            // minpoly of s*eta_b is hb(x/s)*s^deg: integer version:
            IntPoly hbs;
            hbs.c.resize(hb.c.size());
            Int spow(1);
            for (std::size_t j = hb.c.size(); j-- > 0;) {
                hbs.c[j] = hb.c[j] * spow;
                spow *= s;
            }
            hbs.normalize(); // monic: lc stays 1 (top coefficient scaled by s^0)
            RationalPoly norm = trager_norm(ip_to_rat(hbs), ha, 1);
            // norm(t) = prod_{i} hbs(t - alpha_i): roots are s*beta_j + alpha_i
            auto [cn, nint] = rp_to_int(norm);
            (void)cn;
            ModPoly test;
            bool squarefree = false;
            std::uint64_t pp = 1000003;
            for (int tries = 0; tries < 6 && !squarefree; ++tries) {
                pp = next_prime_u64(pp);
                if (int_mod(nint.lc(), pp) == 0) continue;
                ModPoly np = ip_to_mod(nint, pp);
                if (np.degree() != nint.degree()) continue;
                squarefree = mp_gcd(np, mp_derivative(np)).degree() == 0;
            }
            if (!squarefree) continue;
            out.eta = ce_add(ce_embed(acc.eta, out.ambient_m),
                             ce_mul(ce_from_rat(out.ambient_m, Rat(s)), ce_embed(b.eta, out.ambient_m)));
            out.eta_minpoly = rp_monic(norm);
            break;
        }
        if (out.eta_minpoly.degree() != static_cast<long>(out.degree))
            throw std::logic_error("compositum minpoly has wrong degree");
        acc = std::move(out);
    }
    return acc;
}

RationalPoly period_minpoly_by_resultant(const SubfieldPresentation& sp) {
    // eliminate zeta: Res_y(Phi_m(y), x - eta(y)) = h(x)^{|Delta|}
    const CycloField& F = CycloField::get(sp.ambient_m);
    IntPoly phi = rp_to_int(F.phi).prim;
    auto [den, E] = [&] {
        Int d(1);
        for (const auto& v : sp.eta.rep.c) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), v.get_den().get_mpz_t());
        IntPoly ip;
        for (const auto& v : sp.eta.rep.c) {
            Rat s = v * Rat(d);
            s.canonicalize();
            ip.c.push_back(s.get_num());
        }
        ip.normalize();
        return std::pair(d, ip);
    }();
    std::vector<IntPoly> tc(2);
    tc[0] = ip_scale(E, Int(-1));
    tc[1].c = {den};
    RationalPoly power = rp_monic(resultant_bivariate_in_t(phi, tc));
    // h^{|Delta|} -> h by repeated squarefree-part extraction
    RationalPoly h = power;
    RationalPoly g = rp_gcd(h, rp_derivative(h));
    while (g.degree() > 0) {
        h = rp_quo_exact(h, g);
        g = rp_gcd(h, rp_derivative(h));
    }
    return rp_monic(h);
}

bool is_delta_fixed(const SubfieldPresentation& sp, const CycloElement& a) {
    for (std::uint64_t c : sp.delta) {
        if (c == 1) continue;
        if (!(automorphism(c, a) == a)) return false;
    }
    return true;
}

CycloElement to_ambient(const SubfieldPresentation& sp, const NFElem& a) {
    return ce_eval_poly(a.rep, sp.eta);
}

} // namespace ttower
