#include "ttower/rat_factor.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "ttower/mod_factor.hpp"

namespace ttower {

RationalPoly FactorizationQ::reassemble() const {
    RationalPoly r = rp_const(content);
    for (const auto& [g, e] : factors)
        for (unsigned i = 0; i < e; ++i) r = rp_mul(r, g);
    if (!unfactored.is_zero())
        for (unsigned i = 0; i < unfactored_multiplicity; ++i) r = rp_mul(r, unfactored);
    return r;
}

// ---- arithmetic on integer polynomials mod m (m = p^k as mpz) ----

namespace {

Int mod_pos(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

IntPoly zmod(const IntPoly& a, const Int& m) {
    IntPoly r = a;
    for (auto& v : r.c) v = mod_pos(v, m);
    r.normalize();
    return r;
}

IntPoly zmul_school(const IntPoly& a, const IntPoly& b, const Int& m) {
    IntPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    }
    for (auto& v : r.c) v = mod_pos(v, m);
    r.normalize();
    return r;
}

IntPoly zmul(const IntPoly& a, const IntPoly& b, const Int& m) {
    // Karatsuba pays off on the large lifted products
    if (std::min(a.c.size(), b.c.size()) <= 24) return zmul_school(a, b, m);
    std::size_t half = (std::max(a.c.size(), b.c.size()) + 1) / 2;
    auto split = [half](const IntPoly& v) {
        IntPoly lo, hi;
        lo.c.assign(v.c.begin(), v.c.begin() + std::min(half, v.c.size()));
        if (v.c.size() > half) hi.c.assign(v.c.begin() + half, v.c.end());
        lo.normalize();
        hi.normalize();
        return std::pair(lo, hi);
    };
    auto [a0, a1] = split(a);
    auto [b0, b1] = split(b);
    IntPoly z0 = zmul(a0, b0, m);
    IntPoly z2 = zmul(a1, b1, m);
    IntPoly z1 = zmul(ip_add(a0, a1), ip_add(b0, b1), m);
    z1 = ip_sub(ip_sub(z1, z0), z2);
    IntPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, Int(0));
    for (std::size_t i = 0; i < z0.c.size(); ++i) r.c[i] += z0.c[i];
    for (std::size_t i = 0; i < z1.c.size(); ++i)
        if (i + half < r.c.size()) r.c[i + half] += z1.c[i];
    for (std::size_t i = 0; i < z2.c.size(); ++i)
        if (i + 2 * half < r.c.size()) r.c[i + 2 * half] += z2.c[i];
    for (auto& v : r.c) v = mod_pos(v, m);
    r.normalize();
    return r;
}

// division by a monic polynomial, coefficients mod m
void zdivrem_monic(const IntPoly& a, const IntPoly& b, const Int& m, IntPoly& quo, IntPoly& rem) {
    rem = zmod(a, m);
    quo = IntPoly();
    long db = b.degree();
    if (rem.degree() < db) return;
    quo.c.assign(rem.c.size() - db, Int(0));
    for (long k = rem.degree(); k >= db; --k) {
        if (static_cast<std::size_t>(k) >= rem.c.size()) continue;
        Int coef = rem.c[k];
        if (coef == 0) continue;
        quo.c[k - db] = coef;
        for (long i = 0; i <= db; ++i) rem.c[k - db + i] = mod_pos(rem.c[k - db + i] - coef * b.c[i], m);
    }
    quo.normalize();
    rem.normalize();
}

// symmetric representative in (-m/2, m/2]
IntPoly zsym(const IntPoly& a, const Int& m) {
    IntPoly r = zmod(a, m);
    Int half = m / 2;
    for (auto& v : r.c)
        if (v > half) v -= m;
    r.normalize();
    return r;
}

struct HenselTree {
    // binary product tree over the monic modular factors
    struct Node {
        IntPoly val;     // product of leaves below, monic mod current modulus
        IntPoly s, t;    // bezout: s*left + t*right = 1 mod current modulus
        int left = -1, right = -1; // node indices; -1 -> leaf
    };
    std::vector<Node> nodes;
    int root = -1;

    int build(std::vector<IntPoly>& leaves, std::size_t lo, std::size_t hi, std::uint64_t p) {
        Node n;
        if (hi - lo == 1) {
            n.val = leaves[lo];
            nodes.push_back(n);
            return static_cast<int>(nodes.size()) - 1;
        }
        std::size_t mid = (lo + hi) / 2;
        int l = build(leaves, lo, mid, p);
        int r = build(leaves, mid, hi, p);
        n.left = l;
        n.right = r;
        Int m(static_cast<unsigned long>(p));
        n.val = zmul(nodes[l].val, nodes[r].val, m);
        // bezout over F_p via ModPoly xgcd
        ModPoly A = ip_to_mod(nodes[l].val, p), B = ip_to_mod(nodes[r].val, p);
        ModPoly s0 = mp_const(p, 1), s1 = mp_const(p, 0);
        ModPoly t0 = mp_const(p, 0), t1 = mp_const(p, 1);
        ModPoly r0 = A, r1 = B;
        while (!r1.is_zero()) {
            ModPoly q, rr;
            mp_divrem(r0, r1, q, rr);
            ModPoly s2 = mp_sub(s0, mp_mul(q, s1));
            ModPoly t2 = mp_sub(t0, mp_mul(q, t1));
            r0 = r1; r1 = rr;
            s0 = s1; s1 = s2;
            t0 = t1; t1 = t2;
        }
        // r0 = gcd (a nonzero constant since the factors are coprime)
        std::uint64_t inv = inv_mod(r0.lc(), p);
        s0 = mp_scale(s0, inv);
        t0 = mp_scale(t0, inv);
        auto mp_to_ip = [](const ModPoly& x) {
            IntPoly y;
            y.c.reserve(x.c.size());
            for (auto v : x.c) y.c.emplace_back(static_cast<unsigned long>(v));
            y.normalize();
            return y;
        };
        n.s = mp_to_ip(s0);
        n.t = mp_to_ip(t0);
        nodes.push_back(n);
        return static_cast<int>(nodes.size()) - 1;
    }

    // lift the tree from modulus m to m^2, with target monic polynomial f_node
    void lift(int idx, const IntPoly& target, const Int& m, const Int& m2) {
        Node& n = nodes[idx];
        if (n.left < 0) {
            n.val = target;
            return;
        }
        IntPoly g = nodes[n.left].val, h = nodes[n.right].val;
        IntPoly s = n.s, t = n.t;
        // factor lift: e = target - g*h; g' = g + t*e + q*g where s*e = q*h + r
        IntPoly e = zmod(ip_sub(target, zmul(g, h, m2)), m2);
        IntPoly q, r;
        zdivrem_monic(zmul(s, e, m2), h, m2, q, r);
        IntPoly gp = zmod(ip_add(ip_add(g, zmul(t, e, m2)), zmul(q, g, m2)), m2);
        IntPoly hp = zmod(ip_add(h, r), m2);
        // bezout lift: b = s*g' + t*h' - 1; s' = s - d, t' = t - t*b - c*g'
        IntPoly one;
        one.c = {Int(1)};
        IntPoly b = zmod(ip_sub(ip_add(zmul(s, gp, m2), zmul(t, hp, m2)), one), m2);
        IntPoly c, d;
        zdivrem_monic(zmul(s, b, m2), hp, m2, c, d);
        IntPoly sp = zmod(ip_sub(s, d), m2);
        IntPoly tp = zmod(ip_sub(ip_sub(t, zmul(t, b, m2)), zmul(c, gp, m2)), m2);
        n.val = target;
        n.s = sp;
        n.t = tp;
        lift(n.left, gp, m, m2);
        lift(n.right, hp, m, m2);
    }

    void collect(int idx, std::vector<IntPoly>& out) const {
        const Node& n = nodes[idx];
        if (n.left < 0) {
            out.push_back(n.val);
            return;
        }
        collect(n.left, out);
        collect(n.right, out);
    }
};

// full squarefree decomposition over Q (Yun); used on the slow path only
std::vector<std::pair<RationalPoly, unsigned>> squarefree_decompose_q(const RationalPoly& f) {
    std::vector<std::pair<RationalPoly, unsigned>> out;
    RationalPoly a = rp_monic(f);
    RationalPoly da = rp_derivative(a);
    RationalPoly g = rp_gcd(a, da);
    if (g.degree() <= 0) {
        out.emplace_back(a, 1);
        return out;
    }
    RationalPoly c = rp_quo_exact(a, g);
    RationalPoly d = rp_sub(rp_quo_exact(da, g), rp_derivative(c));
    unsigned i = 1;
    while (c.degree() > 0) {
        RationalPoly p = rp_gcd(c, d);
        if (p.degree() > 0) out.emplace_back(rp_monic(p), i);
        RationalPoly cn = p.degree() > 0 ? rp_quo_exact(c, p) : c;
        d = rp_sub(p.degree() > 0 ? rp_quo_exact(d, p) : d, rp_derivative(cn));
        c = cn;
        ++i;
    }
    return out;
}

// factor a primitive, squarefree integer polynomial (deg >= 1, f(0) != 0)
// into irreducible primitive integer polynomials; only factors of degree <=
// cap are split off when capped.
struct SquarefreeFactorResult {
    std::vector<IntPoly> factors;
    IntPoly residual; // zero if fully factored
};

SquarefreeFactorResult factor_squarefree_int(const IntPoly& f_in, std::optional<long> cap,
                                             const FactorConfig& cfg) {
    SquarefreeFactorResult out;
    IntPoly f = f_in;
    if (f.degree() == 1) {
        out.factors.push_back(f);
        return out;
    }
    // choose reduction prime: odd, not dividing lc, f squarefree mod p; among
    // candidates prefer fewest modular factors
    std::uint64_t best_p = 0;
    std::vector<long> best_degs;
    std::uint64_t p = 97;
    unsigned tried = 0;
    while (tried < cfg.prime_candidates) {
        p = next_prime_u64(p);
        if (int_mod(f.lc(), p) == 0) continue;
        ModPoly fp = ip_to_mod(f, p);
        if (fp.degree() != f.degree()) continue;
        ModPoly g = mp_gcd(fp, mp_derivative(fp));
        if (g.degree() != 0) continue;
        auto degs = factor_degrees_mod_q(fp);
        ++tried;
        if (best_p == 0 || degs.size() < best_degs.size()) {
            best_p = p;
            best_degs = degs;
        }
        if (degs.size() <= 2) break; // cannot do better for recombination
    }
    if (best_p == 0) throw resource_exhausted("factor_over_Q: no usable reduction prime found");
    p = best_p;

    auto fac = factor_mod_q(ip_to_mod(f, p), cfg.seed);
    if (fac.factors.size() == 1) {
        if (cap && f.degree() > *cap) {
            out.residual = f;
        } else {
            out.factors.push_back(f);
        }
        return out;
    }

    // Mignotte-style bound for coefficients of lc(f) * (any factor of degree <= D)
    long D = cap ? std::min<long>(*cap, f.degree() - 1) : f.degree() / 2;
    D = std::max<long>(D, 1);
    Int binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(D), static_cast<unsigned long>(D / 2));
    Int bound = binom * ip_norm2_ceil(f) * abs(f.lc());
    Int target = 2 * bound + 1;

    // Hensel lift the monic modular factorization of f/lc to modulus >= target
    std::vector<IntPoly> leaves;
    leaves.reserve(fac.factors.size());
    for (auto& [g, e] : fac.factors) {
        IntPoly ip;
        ip.c.reserve(g.c.size());
        for (auto v : g.c) ip.c.emplace_back(static_cast<unsigned long>(v));
        leaves.push_back(std::move(ip));
    }
    HenselTree tree;
    tree.root = tree.build(leaves, 0, leaves.size(), p);
    Int m(static_cast<unsigned long>(p));
    while (m < target) {
        Int m2 = m * m;
        // monic version of f mod m2
        Int linv;
        Int lcm2 = mod_pos(f.lc(), m2);
        mpz_invert(linv.get_mpz_t(), lcm2.get_mpz_t(), m2.get_mpz_t());
        IntPoly fm = zmod(ip_scale(f, linv), m2);
        tree.lift(tree.root, fm, m, m2);
        m = m2;
    }
    std::vector<IntPoly> lifted;
    tree.collect(tree.root, lifted);

    // subset recombination: increasing cardinality with degree-sum pruning
    // over the degree-sorted live factors; deterministic order throughout
    std::vector<char> used(lifted.size(), 0);
    IntPoly frem = f;
    std::uint64_t trials = 0;
    bool progress = true;
    while (progress) {
        progress = false;
        long dcur = cap ? std::min<long>(*cap, frem.degree() - 1) : frem.degree() / 2;
        if (dcur < 1) break;
        std::vector<std::size_t> live;
        for (std::size_t i = 0; i < lifted.size(); ++i)
            if (!used[i]) live.push_back(i);
        std::sort(live.begin(), live.end(), [&](std::size_t a, std::size_t b) {
            if (lifted[a].degree() != lifted[b].degree()) return lifted[a].degree() < lifted[b].degree();
            return a < b;
        });
        // try_subset returns true when a true factor was split off
        std::vector<std::size_t> idx;
        auto try_subset = [&]() -> bool {
            Int t0 = mod_pos(frem.lc(), m);
            for (std::size_t i : idx) t0 = mod_pos(t0 * lifted[i].c[0], m);
            if (t0 > m / 2) t0 -= m;
            Int head = frem.lc() * frem.c[0];
            if (t0 != 0 && head % t0 != 0) return false;
            IntPoly cand;
            cand.c = {frem.lc()};
            for (std::size_t i : idx) cand = zmul(cand, lifted[i], m);
            cand = zsym(cand, m);
            cand = ip_primitive(cand);
            if (!ip_divides(cand, frem)) return false;
            out.factors.push_back(cand);
            IntPoly quo; // synthetic division, exact by construction
            {
                IntPoly r = frem;
                quo.c.assign(r.c.size() - cand.c.size() + 1, Int(0));
                for (long k = r.degree(); k >= cand.degree(); --k) {
                    Int coef = r.c[k] / cand.lc();
                    quo.c[k - cand.degree()] = coef;
                    for (long i2 = 0; i2 <= cand.degree(); ++i2)
                        r.c[k - cand.degree() + i2] -= coef * cand.c[i2];
                }
                quo.normalize();
            }
            frem = ip_primitive(quo);
            for (std::size_t i : idx) used[i] = 1;
            return true;
        };
        // walk(start, need, cap_left): extend idx with `need` more factors from
        // live[start..], keeping the degree sum within cap_left
        std::function<bool(std::size_t, std::size_t, long)> walk =
            [&](std::size_t start, std::size_t need, long cap_left) -> bool {
            if (need == 0) return try_subset();
            for (std::size_t pos = start; pos + need <= live.size() + 0; ++pos) {
                long d = lifted[live[pos]].degree();
                // degrees ascend, so once one factor is too big the rest are too
                if (d * static_cast<long>(need) > cap_left) return false;
                if (++trials > cfg.subset_budget)
                    throw resource_exhausted("factor_over_Q: recombination budget exceeded");
                idx.push_back(live[pos]);
                bool hit = walk(pos + 1, need - 1, cap_left - d);
                idx.pop_back();
                if (hit) return true;
            }
            return false;
        };
        for (std::size_t card = 1; card <= live.size(); ++card) {
            // smallest possible degree sum at this cardinality
            long min_sum = 0;
            for (std::size_t i = 0; i < card; ++i) min_sum += lifted[live[i]].degree();
            if (min_sum > dcur) break;
            idx.clear();
            if (walk(0, card, dcur)) {
                progress = true;
                break;
            }
        }
    }
    if (frem.degree() >= 1) {
        if (cap && frem.degree() > *cap) {
            out.residual = frem;
        } else {
            out.factors.push_back(frem); // irreducible: survived uncapped half-degree search
        }
    }
    return out;
}

bool rat_poly_less(const RationalPoly& a, const RationalPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t i = a.c.size(); i-- > 0;) {
        if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
    }
    return false;
}

} // namespace

FactorizationQ factor_over_Q(const RationalPoly& f, std::optional<long> degree_cap,
                             const FactorConfig& cfg) {
    if (f.is_zero()) throw std::domain_error("factor_over_Q: zero polynomial");
    FactorizationQ out;
    out.capped = degree_cap.has_value();
    auto [content, F] = rp_to_int(f);
    out.content = content;
    if (F.degree() < 1) return out;

    // strip powers of x
    unsigned xpow = 0;
    while (F.c[0] == 0) {
        F.c.erase(F.c.begin());
        ++xpow;
    }
    if (xpow) out.factors.emplace_back(rp_x(), xpow);

    if (F.degree() >= 1) {
        // squarefree fast path: f squarefree mod a good prime implies squarefree over Z
        bool squarefree = false;
        std::uint64_t p = 1000003;
        for (int tries = 0; tries < 6 && !squarefree; ++tries) {
            p = next_prime_u64(p);
            if (int_mod(F.lc(), p) == 0) continue;
            ModPoly fp = ip_to_mod(F, p);
            if (fp.degree() != F.degree()) continue;
            squarefree = mp_gcd(fp, mp_derivative(fp)).degree() == 0;
        }
        std::vector<std::pair<IntPoly, unsigned>> sf_parts;
        if (squarefree) {
            sf_parts.emplace_back(F, 1);
        } else {
            for (auto& [g, e] : squarefree_decompose_q(ip_to_rat(F)))
                sf_parts.emplace_back(rp_to_int(g).prim, e);
        }
        for (auto& [part, mult] : sf_parts) {
            auto res = factor_squarefree_int(part, degree_cap, cfg);
            for (auto& g : res.factors) out.factors.emplace_back(ip_to_rat(g), mult);
            if (!res.residual.is_zero()) {
                out.unfactored = ip_to_rat(res.residual);
                out.unfactored_multiplicity = mult;
            }
        }
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return rat_poly_less(a.first, b.first); });
    // merge equal factors
    std::vector<std::pair<RationalPoly, unsigned>> merged;
    for (auto& fe : out.factors) {
        if (!merged.empty() && merged.back().first == fe.first)
            merged.back().second += fe.second;
        else
            merged.push_back(fe);
    }
    out.factors = std::move(merged);
    return out;
}

std::vector<Rat> rational_roots(const RationalPoly& f, const FactorConfig& cfg) {
    auto fac = factor_over_Q(f, 1, cfg);
    std::vector<Rat> roots;
    for (auto& [g, e] : fac.factors) {
        (void)e;
        if (g.degree() == 1) {
            Rat r = -g.c[0] / g.c[1];
            r.canonicalize();
            roots.push_back(r);
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

} // namespace ttower
