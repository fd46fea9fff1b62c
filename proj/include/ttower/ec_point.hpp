#ifndef TTOWER_EC_POINT_HPP
#define TTOWER_EC_POINT_HPP

#include <stdexcept>

namespace ttower {

// affine point or the point at infinity, over any exact field type K
template <class K>
struct ECPoint {
    bool inf = true;
    K x{}, y{};

    static ECPoint infinity() { return ECPoint{}; }
    static ECPoint affine(K px, K py) { return ECPoint{false, std::move(px), std::move(py)}; }
};

// field operations bundle: K add(a,b), sub, mul, div, neg, from_int(long),
// bool is_zero(a), bool eq(a,b)
template <class K, class Ops>
struct ECGroup {
    Ops f;
    K a1, a2, a3, a4, a6;

    bool on_curve(const ECPoint<K>& P) const {
        if (P.inf) return true;
        // y^2 + a1 x y + a3 y - x^3 - a2 x^2 - a4 x - a6 = 0
        K lhs = f.add(f.mul(P.y, P.y), f.add(f.mul(a1, f.mul(P.x, P.y)), f.mul(a3, P.y)));
        K rhs = f.add(f.mul(P.x, f.mul(P.x, P.x)),
                      f.add(f.mul(a2, f.mul(P.x, P.x)), f.add(f.mul(a4, P.x), a6)));
        return f.eq(lhs, rhs);
    }

    ECPoint<K> neg(const ECPoint<K>& P) const {
        if (P.inf) return P;
        // -(x,y) = (x, -y - a1 x - a3)
        return ECPoint<K>::affine(P.x, f.sub(f.neg(P.y), f.add(f.mul(a1, P.x), a3)));
    }

    ECPoint<K> add(const ECPoint<K>& P, const ECPoint<K>& Q) const {
        if (P.inf) return Q;
        if (Q.inf) return P;
        if (f.eq(P.x, Q.x)) {
            // either Q = -P or a doubling
            K negy = f.sub(f.neg(P.y), f.add(f.mul(a1, P.x), a3));
            if (f.eq(Q.y, negy)) return ECPoint<K>::infinity();
        }
        K lam, nu;
        if (f.eq(P.x, Q.x) && f.eq(P.y, Q.y)) {
            // lambda = (3x^2 + 2 a2 x + a4 - a1 y) / (2y + a1 x + a3)
            K den = f.add(f.add(P.y, P.y), f.add(f.mul(a1, P.x), a3));
            if (f.is_zero(den)) return ECPoint<K>::infinity();
            K num = f.sub(f.add(f.mul(f.from_int(3), f.mul(P.x, P.x)),
                                f.add(f.mul(f.from_int(2), f.mul(a2, P.x)), a4)),
                          f.mul(a1, P.y));
            lam = f.div(num, den);
            // nu = (-x^3 + a4 x + 2 a6 - a3 y) / (2y + a1 x + a3)
            K nun = f.sub(f.add(f.mul(a4, P.x), f.mul(f.from_int(2), a6)),
                          f.add(f.mul(P.x, f.mul(P.x, P.x)), f.mul(a3, P.y)));
            nu = f.div(nun, den);
        } else {
            lam = f.div(f.sub(Q.y, P.y), f.sub(Q.x, P.x));
            nu = f.sub(P.y, f.mul(lam, P.x));
        }
        K x3 = f.sub(f.sub(f.sub(f.add(f.mul(lam, lam), f.mul(a1, lam)), a2), P.x), Q.x);
        K y3 = f.sub(f.sub(f.neg(f.mul(f.add(lam, a1), x3)), nu), a3);
        return ECPoint<K>::affine(x3, y3);
    }

    ECPoint<K> mul(long n, ECPoint<K> P) const {
        if (n < 0) {
            P = neg(P);
            n = -n;
        }
        ECPoint<K> R = ECPoint<K>::infinity();
        while (n) {
            if (n & 1) R = add(R, P);
            P = add(P, P);
            n >>= 1;
        }
        return R;
    }

    // least m <= cap with mP = O, else 0
    long point_order(const ECPoint<K>& P, long cap) const {
        ECPoint<K> R = P;
        for (long m = 1; m <= cap; ++m) {
            if (R.inf) return m;
            R = add(R, P);
        }
        return 0;
    }
};

} // namespace ttower

#endif
