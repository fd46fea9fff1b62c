#include "ttower/number_field.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "ttower/mod_factor.hpp"
#include "ttower/mod_poly.hpp"
#include "ttower/resultant.hpp"

namespace ttower {

NumberField NumberField::rationals() {
    NumberField F;
    F.h.c = {Int(0), Int(1)};
    F.degree = 1;
    return F;
}

NumberField make_number_field(const IntPoly& h_monic) {
    if (h_monic.degree() < 1 || h_monic.lc() != 1)
        throw std::invalid_argument("make_number_field: monic integer polynomial required");
    NumberField F;
    F.h = h_monic;
    F.degree = static_cast<unsigned>(h_monic.degree());
    return F;
}

static RationalPoly h_rat(const NumberField& F) { return ip_to_rat(F.h); }

NFElem nf_from_rat(const NumberField& F, const Rat& v) {
    (void)F;
    return {rp_const(v)};
}

NFElem nf_gen(const NumberField& F) { return {rp_rem(rp_x(), h_rat(F))}; }

NFElem nf_add(const NumberField& F, const NFElem& a, const NFElem& b) {
    (void)F;
    return {rp_add(a.rep, b.rep)};
}

NFElem nf_sub(const NumberField& F, const NFElem& a, const NFElem& b) {
    (void)F;
    return {rp_sub(a.rep, b.rep)};
}

NFElem nf_mul(const NumberField& F, const NFElem& a, const NFElem& b) {
    return {rp_rem(rp_mul(a.rep, b.rep), h_rat(F))};
}

NFElem nf_neg(const NumberField& F, const NFElem& a) {
    (void)F;
    return {rp_neg(a.rep)};
}

NFElem nf_inv(const NumberField& F, const NFElem& a) {
    if (a.is_zero()) throw std::domain_error("nf_inv: zero");
    RationalPoly r0 = a.rep, r1 = h_rat(F);
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
    if (r0.degree() != 0) throw std::domain_error("nf_inv: not invertible");
    return {rp_rem(rp_scale(s0, 1 / r0.c[0]), h_rat(F))};
}

NFElem nf_div(const NumberField& F, const NFElem& a, const NFElem& b) {
    return nf_mul(F, a, nf_inv(F, b));
}

NFElem nf_eval_poly(const NumberField& F, const RationalPoly& f, const NFElem& a) {
    NFElem r = nf_from_rat(F, Rat(0));
    for (std::size_t i = f.c.size(); i-- > 0;) {
        r = nf_mul(F, r, a);
        r = nf_add(F, r, nf_from_rat(F, f.c[i]));
    }
    return r;
}

RationalPoly nf_minimal_polynomial(const NumberField& F, const NFElem& a) {
    if (F.degree == 1 || a.is_rational()) {
        RationalPoly r;
        r.c = {-a.rational_value(), Rat(1)};
        return r;
    }
    // characteristic polynomial: Res_y(h(y), t - a(y)) = prod (t - a(y_i));
    // clear denominators of a first
    auto [den_sc, A] = [&] {
        Int den(1);
        for (const auto& v : a.rep.c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den().get_mpz_t());
        IntPoly ip;
        for (const auto& v : a.rep.c) {
            Rat s = v * Rat(den);
            s.canonicalize();
            ip.c.push_back(s.get_num());
        }
        ip.normalize();
        return std::pair(den, ip);
    }();
    // Res_y(h(y), d*t - A(y)) = den^deg(h) * charpoly(t) evaluated suitably:
    // use t-coeffs F(t,y) = den*t - A(y)
    std::vector<IntPoly> tc(2);
    tc[0] = ip_scale(A, Int(-1));
    tc[1].c = {den_sc};
    RationalPoly scaled = resultant_bivariate_in_t(F.h, tc); // prod(den*t - A(y_i))
    // charpoly(t) = scaled(t) / den^deg h, monic
    RationalPoly charpoly = rp_monic(scaled);
    // minimal polynomial: charpoly is minpoly^k; take squarefree part
    RationalPoly g = rp_gcd(charpoly, rp_derivative(charpoly));
    RationalPoly minpoly = g.degree() > 0 ? rp_quo_exact(charpoly, g) : charpoly;
    return rp_monic(minpoly);
}

namespace {

Int mod_pos_int(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

// rational reconstruction of c mod m: p/q with |p|, q <= sqrt(m/2)
std::optional<Rat> rational_reconstruct(const Int& c, const Int& m) {
    Int bound;
    mpz_sqrt(bound.get_mpz_t(), Int(m / 2).get_mpz_t());
    Int r0 = m, r1 = mod_pos_int(c, m);
    Int t0(0), t1(1);
    while (r1 > bound) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    if (t1 == 0) return std::nullopt;
    Int num = r1, den = t1;
    if (den < 0) {
        den = -den;
        num = -num;
    }
    if (den > bound) return std::nullopt;
    Int g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (g != 1) return std::nullopt;
    Rat out = Rat(num) / Rat(den);
    out.canonicalize();
    return out;
}

// Tonelli-Shanks square root mod an odd prime; nullopt for non-residues
std::optional<std::uint64_t> sqrt_mod(std::uint64_t a, std::uint64_t r) {
    a %= r;
    if (a == 0) return 0;
    if (pow_mod(a, (r - 1) / 2, r) != 1) return std::nullopt;
    if (r % 4 == 3) return pow_mod(a, (r + 1) / 4, r);
    std::uint64_t s = r - 1;
    unsigned e = 0;
    while ((s & 1) == 0) {
        s >>= 1;
        ++e;
    }
    std::uint64_t n = 2;
    while (pow_mod(n, (r - 1) / 2, r) == 1) ++n;
    std::uint64_t x = pow_mod(a, (s + 1) / 2, r);
    std::uint64_t b = pow_mod(a, s, r);
    std::uint64_t g = pow_mod(n, s, r);
    unsigned k = e;
    for (;;) {
        std::uint64_t t = b;
        unsigned m = 0;
        while (t != 1 && m < k) {
            t = mul_mod(t, t, r);
            ++m;
        }
        if (m == 0) return x;
        std::uint64_t gs = pow_mod(g, 1ull << (k - m - 1), r);
        x = mul_mod(x, gs, r);
        g = mul_mod(gs, gs, r);
        b = mul_mod(b, g, r);
        k = m;
    }
}

// height-stable root recovery: the residue image of the wanted root is pinned
// per embedding theta_i by the norm factor H, the representation polynomial is
// interpolated mod r, coefficients are assembled by CRT and rationally
// reconstructed, and the result is verified exactly in the field.
// candidate_roots(r, theta_i) supplies the images of admissible roots in F_r.
std::optional<NFElem> recover_root_by_crt(
    const NumberField& F, const RationalPoly& H, long s,
    const std::function<std::vector<std::uint64_t>(std::uint64_t)>& candidates_mod,
    const std::function<bool(const NFElem&)>& verify) {
    unsigned n = F.degree;
    auto [cH, Hi] = rp_to_int(H);
    (void)cH;
    Int modulus(1);
    std::vector<Int> residues(n, Int(0));
    std::optional<std::vector<Rat>> prev;
    std::uint64_t r = 1ull << 20;
    unsigned used = 0;
    while (used < 200) {
        r = next_prime_u64(r);
        if (int_mod(F.h.lc(), r) == 0 || int_mod(Hi.lc(), r) == 0) continue;
        ModPoly hr = ip_to_mod(F.h, r);
        if (hr.degree() != F.h.degree()) continue;
        if (mp_gcd(hr, mp_derivative(hr)).degree() != 0) continue;
        if (count_roots_mod_q(hr) != n) continue; // need a completely split prime
        std::vector<std::uint64_t> thetas = roots_mod_q(hr);
        if (thetas.size() != n) continue;
        ModPoly Hr = ip_to_mod(Hi, r);
        // per embedding: the unique candidate a with H(a + s*theta_i) = 0
        std::vector<std::uint64_t> alpha(n);
        bool ok = true;
        auto cands_all = candidates_mod(r);
        std::sort(cands_all.begin(), cands_all.end());
        cands_all.erase(std::unique(cands_all.begin(), cands_all.end()), cands_all.end());
        for (unsigned i = 0; i < n && ok; ++i) {
            std::uint64_t found = 0;
            unsigned hits = 0;
            std::uint64_t sh = s >= 0 ? mul_mod(static_cast<std::uint64_t>(s), thetas[i], r)
                                      : r - mul_mod(static_cast<std::uint64_t>(-s), thetas[i], r);
            for (std::uint64_t a : cands_all) {
                if (mp_eval(Hr, add_mod(a, sh % r, r)) == 0) {
                    found = a;
                    ++hits;
                }
            }
            if (hits != 1) ok = false;
            alpha[i] = found;
        }
        if (!ok) continue; // ambiguous matching at this prime, try the next
        // Lagrange interpolation mod r: P(theta_i) = alpha_i
        ModPoly P(r);
        for (unsigned i = 0; i < n; ++i) {
            ModPoly basis = mp_const(r, 1);
            std::uint64_t denom = 1;
            for (unsigned j = 0; j < n; ++j) {
                if (j == i) continue;
                basis = mp_mul(basis, ModPoly(r, {sub_mod(0, thetas[j], r), 1}));
                denom = mul_mod(denom, sub_mod(thetas[i], thetas[j], r), r);
            }
            P = mp_add(P, mp_scale(basis, mul_mod(alpha[i], inv_mod(denom, r), r)));
        }
        // CRT accumulate
        Int R(static_cast<unsigned long>(r));
        if (modulus == 1) {
            for (unsigned i = 0; i < n; ++i) residues[i] = Int(static_cast<unsigned long>(P.coeff(i)));
            modulus = R;
        } else {
            Int inv;
            Int pm = modulus % R;
            mpz_invert(inv.get_mpz_t(), pm.get_mpz_t(), R.get_mpz_t());
            for (unsigned i = 0; i < n; ++i) {
                Int diff = (Int(static_cast<unsigned long>(P.coeff(i))) - residues[i] % R) % R;
                if (diff < 0) diff += R;
                residues[i] += modulus * ((diff * inv) % R);
            }
            modulus *= R;
        }
        ++used;
        if (used >= 2) {
            std::vector<Rat> guess(n);
            bool all = true;
            for (unsigned i = 0; i < n && all; ++i) {
                auto rec = rational_reconstruct(residues[i], modulus);
                if (!rec) all = false;
                else guess[i] = *rec;
            }
            if (all) {
                if (prev && *prev == guess) {
                    RationalPoly rep;
                    rep.c = guess;
                    rep.normalize();
                    NFElem root{rep};
                    if (verify(root)) return root;
                    prev.reset(); // stable but wrong: keep accumulating
                } else {
                    prev = guess;
                }
            } else {
                prev.reset();
            }
        }
    }
    return std::nullopt;
}

bool probably_squarefree(const RationalPoly& f) {
    // gcd(f, f') == 1 mod a good prime certifies squarefreeness over Q
    auto [c, F] = rp_to_int(f);
    (void)c;
    std::uint64_t p = 1000003;
    for (int tries = 0; tries < 8; ++tries) {
        p = next_prime_u64(p);
        if (int_mod(F.lc(), p) == 0) continue;
        ModPoly fp = ip_to_mod(F, p);
        if (fp.degree() != F.degree()) continue;
        if (mp_gcd(fp, mp_derivative(fp)).degree() == 0) return true;
        return false; // nonsquarefree mod a good prime: treat as not squarefree
    }
    return false;
}

// primes splitting completely in F = Q[y]/(h), skipping disc(h) divisors
std::vector<std::uint64_t> split_primes_of(const NumberField& F, unsigned count) {
    std::vector<std::uint64_t> out;
    std::uint64_t r = 100;
    while (out.size() < count && r < 2000000) {
        r = next_prime_u64(r);
        if (int_mod(F.h.lc(), r) == 0) continue;
        ModPoly hr = ip_to_mod(F.h, r);
        if (hr.degree() != F.h.degree()) continue;
        if (mp_gcd(hr, mp_derivative(hr)).degree() != 0) continue;
        if (count_roots_mod_q(hr) == static_cast<unsigned>(hr.degree())) out.push_back(r);
    }
    return out;
}

// roots in F of a Q-irreducible polynomial g with 1 < deg g and deg g | deg F
std::vector<NFElem> roots_of_irreducible(const NumberField& F, const RationalPoly& g,
                                         const FactorConfig& cfg, unsigned max_roots) {
    std::vector<NFElem> out;
    // modular screen: the fields here are abelian over Q, so a root of g in F
    // puts every root of g in F, and g must
    // split into linears modulo every prime that splits completely in F; one
    // counterexample prime proves there is no root
    {
        auto [cg, gi] = rp_to_int(g);
        (void)cg;
        for (std::uint64_t r : split_primes_of(F, 3)) {
            if (int_mod(gi.lc(), r) == 0) continue;
            ModPoly gr = ip_to_mod(gi, r);
            if (gr.degree() != gi.degree()) continue;
            ModPoly sf = mp_gcd(gr, mp_derivative(gr));
            if (sf.degree() != 0) continue; // wild prime for g, not conclusive
            if (count_roots_mod_q(gr) != static_cast<unsigned>(gr.degree())) return out;
        }
    }
    for (long s = 0; s < 64; ++s) {
        RationalPoly norm;
        if (s == 0) {
            // Res_y(h, g(t)) = g(t)^deg h: squarefree only in the trivial field
            if (F.degree == 1) norm = g;
            else continue;
        } else {
            norm = trager_norm(g, F.h, s);
        }
        if (!probably_squarefree(norm)) continue;
        auto fac = factor_over_Q(norm, static_cast<long>(F.degree), cfg);
        auto [cg, gi] = rp_to_int(g);
        (void)cg;
        for (auto& [H, e] : fac.factors) {
            (void)e;
            if (H.degree() != static_cast<long>(F.degree)) continue;
            // each degree-n norm factor pins one root of g in F: recover its
            // representation by CRT over split primes, then verify exactly
            auto candidates = [&gi](std::uint64_t r) { return roots_mod_q(ip_to_mod(gi, r)); };
            auto verify = [&](const NFElem& cand) { return nf_eval_poly(F, g, cand).is_zero(); };
            auto root = recover_root_by_crt(F, H, s, candidates, verify);
            if (root) out.push_back(*root);
            if (max_roots && out.size() >= max_roots) return out;
        }
        return out;
    }
    throw resource_exhausted("roots_of_irreducible: no squarefree norm found");
}

} // namespace

std::vector<NFElem> nf_roots_of(const NumberField& F, const RationalPoly& f,
                                const FactorConfig& cfg, unsigned max_roots) {
    if (f.is_zero()) throw std::domain_error("nf_roots_of: zero polynomial");
    std::vector<NFElem> out;
    auto fac = factor_over_Q(f, static_cast<long>(F.degree), cfg);
    for (auto& [g, e] : fac.factors) {
        (void)e;
        if (g.degree() < 1) continue;
        if (max_roots && out.size() >= max_roots) break;
        if (g.degree() == 1) {
            Rat r = -g.c[0] / g.c[1];
            r.canonicalize();
            out.push_back(nf_from_rat(F, r));
            continue;
        }
        if (F.degree % g.degree() != 0) continue; // cannot embed
        unsigned want = max_roots ? max_roots - static_cast<unsigned>(out.size()) : 0;
        auto roots = roots_of_irreducible(F, rp_monic(g), cfg, want);
        out.insert(out.end(), roots.begin(), roots.end());
    }
    return out;
}

std::optional<NFElem> nf_sqrt(const NumberField& F, const NFElem& a, const FactorConfig& cfg) {
    if (a.is_zero()) return nf_from_rat(F, Rat(0));
    if (a.is_rational() && F.degree == 1) {
        Rat v = a.rational_value();
        if (v < 0) return std::nullopt;
        Int num = v.get_num(), den = v.get_den();
        Int rn, rd;
        if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
            mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
            mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
            return nf_from_rat(F, Rat(rn) / Rat(rd));
        }
        return std::nullopt;
    }
    // rational fast path inside a bigger field
    if (a.is_rational()) {
        Rat v = a.rational_value();
        if (v >= 0) {
            Int num = v.get_num(), den = v.get_den();
            if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
                Int rn, rd;
                mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
                mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
                return nf_from_rat(F, Rat(rn) / Rat(rd));
            }
        }
    }
    // roots of t^2 - a in F via the shifted norm
    Int den(1);
    for (const auto& v : a.rep.c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den().get_mpz_t());
    IntPoly A;
    for (const auto& v : a.rep.c) {
        Rat sres = v * Rat(den);
        sres.canonicalize();
        A.c.push_back(sres.get_num());
    }
    A.normalize();
    for (long s = 1; s < 64; ++s) {
        // F(t,y) = den*(t - s y)^2 - den*a(y) scaled by den: use
        // tc2 = den, tc1 = -2 den s y, tc0 = den s^2 y^2 - den*a(y) -> clear to ints:
        std::vector<IntPoly> tc(3);
        tc[2].c = {den};
        tc[1].c = {Int(0), Int(-2) * den * s};
        tc[1].normalize();
        IntPoly sq;
        sq.c = {Int(0), Int(0), den * s * s};
        tc[0] = ip_sub(sq, A);
        RationalPoly norm = resultant_bivariate_in_t(F.h, tc);
        if (!probably_squarefree(norm)) continue;
        auto fac = factor_over_Q(norm, static_cast<long>(F.degree), cfg);
        // square roots of a mod r, evaluated per split embedding
        auto verify = [&](const NFElem& cand) { return nf_sub(F, nf_mul(F, cand, cand), a).is_zero(); };
        for (auto& [H, e] : fac.factors) {
            (void)e;
            if (H.degree() != static_cast<long>(F.degree)) continue;
            // per-embedding candidates depend on theta, so enumerate the square
            // roots of every embedded value of a
            auto candidates = [&](std::uint64_t r) {
                std::vector<std::uint64_t> cands;
                ModPoly hr = ip_to_mod(F.h, r);
                ModPoly ar = ip_to_mod(A, r); // scaled numerator of a
                std::uint64_t dinv = inv_mod(int_mod(den, r), r);
                for (std::uint64_t th : roots_mod_q(hr)) {
                    std::uint64_t av = mul_mod(mp_eval(ar, th), dinv, r);
                    if (auto sq = sqrt_mod(av, r)) {
                        cands.push_back(*sq);
                        if (*sq) cands.push_back(r - *sq);
                    }
                }
                return cands;
            };
            auto root = recover_root_by_crt(F, H, s, candidates, verify);
            if (root) return root;
        }
        return std::nullopt;
    }
    throw resource_exhausted("nf_sqrt: no squarefree norm found");
}

} // namespace ttower
