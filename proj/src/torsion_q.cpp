#include "ttower/torsion_q.hpp"

#include <sstream>

#include "ttower/division_poly.hpp"
#include "ttower/fq_curve.hpp"

namespace ttower {

std::string TorsionStructure::str() const {
    std::ostringstream os;
    if (a == 1 && b == 1) return "trivial";
    if (a == 1) {
        os << "Z/" << b;
    } else {
        os << "Z/" << a << " + Z/" << b;
    }
    return os.str();
}

namespace {

// y-coordinates over Q of points with the given rational x, if any
std::vector<Rat> rational_ys(const Curve& E, const Rat& x) {
    // y^2 + (a1 x + a3) y - (x^3 + a2 x^2 + a4 x + a6) = 0
    Rat s = E.a1 * x + E.a3;
    Rat rhs = x * x * x + E.a2 * x * x + E.a4 * x + E.a6;
    Rat D = s * s + 4 * rhs;
    D.canonicalize();
    std::vector<Rat> ys;
    if (D < 0) return ys;
    Int num = D.get_num(), den = D.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return ys;
    Int rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    Rat root = Rat(rn) / Rat(rd);
    ys.push_back((-s + root) / 2);
    if (root != 0) ys.push_back((-s - root) / 2);
    for (auto& y : ys) y.canonicalize();
    return ys;
}

// points of exact order m (m a prime power) with rational coordinates
std::vector<ECPoint<Rat>> rational_points_of_order(const Curve& E, const ShortModel& M, long m,
                                                   const FactorConfig& cfg) {
    std::vector<ECPoint<Rat>> out;
    IntPoly prim = primitive_division_poly(M, m);
    auto grp = ec_group_q(E);
    for (const Rat& X : rational_roots(ip_to_rat(prim), cfg)) {
        Rat x = (X - M.tx) / M.sx;
        x.canonicalize();
        for (const Rat& y : rational_ys(E, x)) {
            auto P = ECPoint<Rat>::affine(x, y);
            if (!grp.on_curve(P)) continue;
            if (grp.point_order(P, 2 * m) == m) out.push_back(P);
        }
    }
    return out;
}

} // namespace

bool mazur_allows(const TorsionStructure& t) {
    if (t.a == 1) return (t.b >= 1 && t.b <= 10) || t.b == 12;
    if (t.a == 2) return t.b == 2 || t.b == 4 || t.b == 6 || t.b == 8;
    return false;
}

TorsionQResult torsion_over_Q(const Curve& E, const FactorConfig& cfg) {
    TorsionQResult res;
    ShortModel M = short_model(E);

    // reduction bound: gcd of #E(F_q) over several good odd primes
    std::uint64_t q = 3;
    unsigned used = 0;
    std::uint64_t bound = 0;
    while (used < 10 && q < 2000) {
        if (good_reduction(E, q) && int_mod(M.disc, q) != 0) {
            bound = gcd_u64(bound, point_count_Fq(reduce_curve(E, q)));
            ++used;
            if (bound == 1) break;
        }
        q = next_prime_u64(q);
    }
    res.reduction_bound = static_cast<long>(bound);

    // 2-torsion rank from rational roots of the 2-division cubic
    RationalPoly cubic;
    cubic.c = {E.b6, 2 * E.b4, E.b2, Rat(4)};
    cubic.normalize();
    std::size_t two_roots = rational_roots(cubic, cfg).size();

    // prime-power parts, capped by Mazur and by the reduction bound
    ECPoint<Rat> gen_b = ECPoint<Rat>::infinity();
    ECPoint<Rat> gen_a = ECPoint<Rat>::infinity();
    long b_order = 1;
    auto grp = ec_group_q(E);
    for (long ell : {2L, 3L, 5L, 7L}) {
        if (bound % ell != 0) continue;
        long cap = ell == 2 ? 8 : (ell == 3 ? 9 : 7);
        long found_order = 1;
        ECPoint<Rat> found = ECPoint<Rat>::infinity();
        for (long m = ell; m <= cap; m *= ell) {
            if (bound % m != 0) break;
            auto pts = rational_points_of_order(E, M, m, cfg);
            if (pts.empty()) break;
            found = pts.front();
            found_order = m;
        }
        if (found_order > 1) {
            b_order *= found_order;
            gen_b = gen_b.inf ? found : grp.add(gen_b, found); // orders coprime within the loop? 2-part handled below
        }
    }
    // generators of coprime prime-power orders sum to a point of the product order
    if (!gen_b.inf && grp.point_order(gen_b, 2 * b_order + 1) != b_order)
        throw std::logic_error("torsion_over_Q: generator order mismatch");

    res.group.b = b_order;
    res.group.a = 1;
    if (two_roots == 3) {
        // full 2-torsion: group = Z/2 + Z/b with b even (b's 2-part >= 2)
        if (b_order % 2 != 0) {
            // no point of order 2 found via primitive poly would be odd; the
            // cubic having三 roots forces 2 | group order
            res.group.b = b_order * 2;
        }
        res.group.a = 2;
        // a generator of the complementary Z/2: any 2-torsion point independent of gen_b
        auto roots2 = rational_roots(cubic, cfg);
        for (const Rat& xr : roots2) {
            Rat x = xr; // cubic is in the x of the original model already
            for (const Rat& y : rational_ys(E, x)) {
                auto P = ECPoint<Rat>::affine(x, y);
                if (grp.on_curve(P) && grp.point_order(P, 4) == 2) {
                    // independent iff P != (b/2) * gen_b
                    if (gen_b.inf || res.group.b % 2 != 0) {
                        gen_a = P;
                    } else {
                        auto half = grp.mul(res.group.b / 2, gen_b);
                        if (!(half.inf == P.inf && grp.f.eq(half.x, P.x) && grp.f.eq(half.y, P.y)))
                            gen_a = P;
                    }
                    if (!gen_a.inf) break;
                }
            }
            if (!gen_a.inf) break;
        }
    }
    if (!gen_b.inf) res.generators.push_back(gen_b);
    if (!gen_a.inf) res.generators.push_back(gen_a);
    if (!mazur_allows(res.group))
        throw std::logic_error("torsion_over_Q: computed group outside Mazur's classification");
    return res;
}

} // namespace ttower
