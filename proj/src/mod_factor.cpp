#include "ttower/mod_factor.hpp"

#include <algorithm>
#include <stdexcept>

namespace ttower {

unsigned count_roots_mod_q(const ModPoly& f) {
    if (f.is_zero()) throw std::domain_error("count_roots_mod_q: zero polynomial");
    if (f.degree() == 0) return 0;
    // x^q mod f, then gcd(x^q - x, f)
    ModPoly xq = powmod_poly(mp_x(f.q), Int(static_cast<unsigned long>(f.q)), f);
    ModPoly g = mp_gcd(mp_sub(xq, mp_rem(mp_x(f.q), f)), f);
    return static_cast<unsigned>(g.degree());
}

std::vector<std::uint64_t> roots_mod_q(const ModPoly& f) {
    if (f.is_zero()) throw std::domain_error("roots_mod_q: zero polynomial");
    std::vector<std::uint64_t> out;
    if (f.degree() == 0) return out;
    ModPoly xq = powmod_poly(mp_x(f.q), Int(static_cast<unsigned long>(f.q)), f);
    ModPoly g = mp_gcd(mp_sub(xq, mp_rem(mp_x(f.q), f)), f);
    if (g.degree() <= 0) return out;
    // g splits into distinct linear factors; find them by splitting, or scan when q is small
    if (f.q <= 4096) {
        for (std::uint64_t x = 0; x < f.q && out.size() < static_cast<std::size_t>(g.degree()); ++x)
            if (mp_eval(g, x) == 0) out.push_back(x);
        return out;
    }
    // split g recursively with gcd(g, (x+a)^((q-1)/2) - 1)
    std::vector<ModPoly> stack{mp_monic(g)};
    std::uint64_t shift = 0;
    Int half((f.q - 1) / 2);
    while (!stack.empty()) {
        ModPoly h = stack.back();
        stack.pop_back();
        if (h.degree() == 1) {
            // root = -c0 (monic)
            out.push_back(sub_mod(0, h.c[0], f.q));
            continue;
        }
        if (h.degree() <= 0) continue;
        ModPoly base(f.q, {shift % f.q, 1});
        ++shift;
        ModPoly p = powmod_poly(base, half, h);
        ModPoly s = mp_gcd(mp_sub(p, mp_const(f.q, 1)), h);
        if (s.degree() > 0 && s.degree() < h.degree()) {
            stack.push_back(mp_quo_exact(h, s));
            stack.push_back(s);
        } else {
            stack.push_back(h); // retry with next shift
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// f(x) = g(x^q) -> g, valid in characteristic q
static ModPoly extract_qth_root(const ModPoly& f) {
    ModPoly g(f.q);
    g.c.resize(f.degree() / f.q + 1, 0);
    for (std::size_t i = 0; i < f.c.size(); ++i) {
        if (f.c[i] == 0) continue;
        if (i % f.q != 0) throw std::logic_error("extract_qth_root: not a q-th power");
        g.c[i / f.q] = f.c[i];
    }
    g.normalize();
    return g;
}

static std::vector<std::pair<ModPoly, unsigned>> squarefree_decompose(const ModPoly& f) {
    std::vector<std::pair<ModPoly, unsigned>> out;
    ModPoly d = mp_derivative(f);
    if (d.is_zero()) {
        for (auto& [g, e] : squarefree_decompose(mp_monic(extract_qth_root(f))))
            out.emplace_back(g, e * static_cast<unsigned>(f.q));
        return out;
    }
    ModPoly c = mp_gcd(f, d);
    ModPoly w = mp_quo_exact(f, c);
    unsigned i = 1;
    while (w.degree() > 0) {
        ModPoly y = mp_gcd(w, c);
        ModPoly z = mp_quo_exact(w, y);
        if (z.degree() > 0) out.emplace_back(mp_monic(z), i);
        c = mp_quo_exact(c, y);
        w = std::move(y);
        ++i;
    }
    if (c.degree() > 0) {
        for (auto& [g, e] : squarefree_decompose(mp_monic(extract_qth_root(c))))
            out.emplace_back(g, e * static_cast<unsigned>(f.q));
    }
    return out;
}

// distinct-degree: list of (product of irreducibles of degree d, d)
static std::vector<std::pair<ModPoly, long>> distinct_degree(const ModPoly& f) {
    std::vector<std::pair<ModPoly, long>> out;
    ModPoly fstar = mp_monic(f);
    ModPoly h = mp_rem(mp_x(f.q), fstar);
    Int q(static_cast<unsigned long>(f.q));
    for (long d = 1; fstar.degree() >= 2 * d; ++d) {
        h = powmod_poly(h, q, fstar);
        ModPoly g = mp_gcd(mp_sub(h, mp_rem(mp_x(f.q), fstar)), fstar);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            fstar = mp_quo_exact(fstar, g);
            h = mp_rem(h, fstar);
        }
    }
    if (fstar.degree() > 0) out.emplace_back(fstar, fstar.degree());
    return out;
}

// Cantor-Zassenhaus equal-degree splitting, odd q
static void equal_degree(const ModPoly& f, long d, std::mt19937_64& rng, std::vector<ModPoly>& out) {
    if (f.degree() == d) {
        out.push_back(mp_monic(f));
        return;
    }
    Int e = (pow_int(Int(static_cast<unsigned long>(f.q)), static_cast<unsigned long>(d)) - 1) / 2;
    for (;;) {
        ModPoly r = mp_random(f.q, f.degree() - 1, rng);
        if (r.degree() < 1) continue;
        ModPoly g = mp_gcd(r, f);
        if (g.degree() <= 0) {
            ModPoly p = powmod_poly(r, e, f);
            g = mp_gcd(mp_sub(p, mp_const(f.q, 1)), f);
        }
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(g, d, rng, out);
            equal_degree(mp_quo_exact(f, g), d, rng, out);
            return;
        }
    }
}

ModFactorization factor_mod_q(const ModPoly& f, std::uint64_t seed) {
    if (f.is_zero()) throw std::domain_error("factor_mod_q: zero polynomial");
    if (f.q == 2) throw std::domain_error("factor_mod_q: q = 2 unsupported");
    ModFactorization out;
    out.lc = f.lc();
    if (f.degree() < 1) return out;
    std::mt19937_64 rng(seed);
    for (auto& [sf, mult] : squarefree_decompose(mp_monic(f))) {
        for (auto& [prod, d] : distinct_degree(sf)) {
            std::vector<ModPoly> irr;
            equal_degree(prod, d, rng, irr);
            for (auto& g : irr) out.factors.emplace_back(std::move(g), mult);
        }
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        return a.first.c < b.first.c;
    });
    return out;
}

bool is_irreducible_mod_q(const ModPoly& f) {
    if (f.degree() <= 0) return false;
    if (f.degree() == 1) return true;
    ModPoly m = mp_monic(f);
    if (!mp_gcd(m, mp_derivative(m)).is_zero() && mp_gcd(m, mp_derivative(m)).degree() > 0) return false;
    auto dd = distinct_degree(m);
    return dd.size() == 1 && dd[0].second == m.degree();
}

std::vector<long> factor_degrees_mod_q(const ModPoly& f) {
    std::vector<long> out;
    for (auto& [sf, mult] : squarefree_decompose(mp_monic(f))) {
        for (auto& [prod, d] : distinct_degree(sf)) {
            long k = prod.degree() / d;
            for (long i = 0; i < k; ++i)
                for (unsigned m = 0; m < mult; ++m) out.push_back(d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace ttower
