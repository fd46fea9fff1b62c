// test-only oracles, independent of the implementation paths they check
#ifndef TTOWER_TESTS_ORACLES_HPP
#define TTOWER_TESTS_ORACLES_HPP

#include <map>
#include <set>
#include <vector>

#include "ttower/fq_curve.hpp"
#include "ttower/torsion_q.hpp"

namespace ttower::oracles {

// Lutz-Nagell brute force on a shrunk integral short model: torsion points
// have integral coordinates with y = 0 or y^2 | disc; orders are verified by
// exact point arithmetic and capped by Mazur's theorem
inline TorsionStructure lutz_nagell_torsion(const Curve& E) {
    ShortModel M = short_model(E);
    Int A = M.A, B = M.B;
    // undo scaling inflation: (A, B) -> (A/d^4, B/d^6) while integral
    for (Int d(2); d <= 16; ++d) {
        Int d4 = d * d * d * d, d6 = d4 * d * d;
        while ((A % d4 == 0) && (B % d6 == 0)) {
            A /= d4;
            B /= d6;
        }
    }
    Int disc = abs(Int(-16) * (4 * A * A * A + 27 * B * B));
    Curve S = make_short_curve(Rat(A), Rat(B));
    auto grp = ec_group_q(S);

    // factor disc by trial division (fixture curves are smooth enough)
    std::map<Int, unsigned> fac;
    Int rest = disc;
    for (Int p(2); p * p <= rest && p < 1000000; p = p == 2 ? Int(3) : p + 2)
        while (rest % p == 0) {
            ++fac[p];
            rest /= p;
        }
    if (rest > 1) ++fac[rest];
    // candidate y: 0 together with every y whose square divides disc
    std::vector<Int> ys{Int(0)};
    {
        std::vector<Int> acc{Int(1)};
        for (auto& [p, e] : fac) {
            std::vector<Int> next;
            Int pk(1);
            for (unsigned f = 0; 2 * f <= e; ++f) {
                for (const Int& a : acc) next.push_back(a * pk);
                pk *= p;
            }
            acc = std::move(next);
        }
        for (const Int& y : acc)
            if (y > 0) ys.push_back(y);
    }

    std::vector<ECPoint<Rat>> torsion;
    torsion.push_back(ECPoint<Rat>::infinity());
    std::set<std::pair<std::string, std::string>> seen;
    for (const Int& y : ys) {
        // integer roots x of x^3 + A x + (B - y^2): divisors of the constant term
        Int c0 = B - y * y;
        std::vector<Int> xs;
        if (c0 == 0) {
            xs.push_back(0);
            for (Int d(1); d * d <= abs(A); ++d)
                if (A % d == 0) {
                    xs.push_back(d);
                    xs.push_back(-d);
                    xs.push_back(abs(A) / d);
                    xs.push_back(-(abs(A) / d));
                }
        } else {
            Int ac0 = abs(c0);
            std::map<Int, unsigned> cfac;
            Int crest = ac0;
            for (Int p(2); p * p <= crest && p < 1000000; p = p == 2 ? Int(3) : p + 2)
                while (crest % p == 0) {
                    ++cfac[p];
                    crest /= p;
                }
            if (crest > 1) ++cfac[crest];
            std::vector<Int> divs{Int(1)};
            for (auto& [p, e] : cfac) {
                std::vector<Int> next;
                Int pk(1);
                for (unsigned f = 0; f <= e; ++f) {
                    for (const Int& a : divs) next.push_back(a * pk);
                    pk *= p;
                }
                divs = std::move(next);
                if (divs.size() > 40000) break; // fixture guard
            }
            for (const Int& d : divs) {
                xs.push_back(d);
                xs.push_back(-d);
            }
        }
        for (const Int& x : xs) {
            if (x * x * x + A * x + B != y * y) continue;
            for (const Int& yy : {Int(y), Int(-y)}) {
                auto P = ECPoint<Rat>::affine(Rat(x), Rat(yy));
                if (!grp.on_curve(P)) continue;
                long ord = grp.point_order(P, 12);
                if (ord == 0) continue; // not torsion (Mazur caps orders at 12)
                auto key = std::pair(P.x.get_str(), P.y.get_str());
                if (seen.insert(key).second) torsion.push_back(P);
                if (yy == 0) break;
            }
        }
    }
    long n = static_cast<long>(torsion.size());
    long maxord = 1;
    for (const auto& P : torsion) {
        if (P.inf) continue;
        long o = grp.point_order(P, 12);
        if (o > maxord) maxord = o;
    }
    TorsionStructure t;
    t.b = maxord;
    t.a = n % maxord == 0 ? n / maxord : 1;
    return t;
}

// all x-coordinates over F_q of points of exact order n, by enumerating the
// reduced curve and computing every point's order
inline std::set<std::uint64_t> brute_order_x_mod_q(const Curve& E, long n, std::uint64_t q) {
    CurveFq C = reduce_curve(E, q);
    auto grp = ec_group_fq(C);
    std::set<std::uint64_t> xs;
    for (const auto& P : enumerate_over_Fq(C)) {
        if (P.inf) continue;
        if (grp.point_order(P, 2 * n) == n) xs.insert(P.x);
    }
    return xs;
}

} // namespace ttower::oracles

#endif
