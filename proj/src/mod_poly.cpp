#include "ttower/mod_poly.hpp"

#include <sstream>
#include <stdexcept>

namespace ttower {

std::size_t g_karatsuba_threshold = 32;

ModPoly::ModPoly(std::uint64_t modulus, std::vector<std::uint64_t> coeffs) : q(modulus), c(std::move(coeffs)) {
    for (auto& v : c) v %= q;
    normalize();
}

void ModPoly::normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

std::string ModPoly::str() const {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || c[i] != 1) os << c[i];
        if (i >= 1) {
            os << (c[i] != 1 ? "*x" : "x");
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

static void check_same_mod(const ModPoly& a, const ModPoly& b) {
    if (a.q != b.q) throw std::invalid_argument("ModPoly: modulus mismatch");
}

ModPoly mp_const(std::uint64_t q, std::uint64_t v) {
    ModPoly r(q);
    v %= q;
    if (v) r.c.push_back(v);
    return r;
}

ModPoly mp_x(std::uint64_t q) { return mp_xpow(q, 1); }

ModPoly mp_xpow(std::uint64_t q, std::size_t n) {
    ModPoly r(q);
    r.c.assign(n + 1, 0);
    r.c[n] = 1;
    return r;
}

ModPoly mp_add(const ModPoly& a, const ModPoly& b) {
    check_same_mod(a, b);
    ModPoly r(a.q);
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = add_mod(a.coeff(i), b.coeff(i), a.q);
    r.normalize();
    return r;
}

ModPoly mp_sub(const ModPoly& a, const ModPoly& b) {
    check_same_mod(a, b);
    ModPoly r(a.q);
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = sub_mod(a.coeff(i), b.coeff(i), a.q);
    r.normalize();
    return r;
}

ModPoly mp_neg(const ModPoly& a) {
    ModPoly r(a.q);
    r.c.resize(a.c.size());
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i] ? a.q - a.c[i] : 0;
    return r;
}

ModPoly mp_scale(const ModPoly& a, std::uint64_t s) {
    s %= a.q;
    ModPoly r(a.q);
    if (s == 0) return r;
    r.c.resize(a.c.size());
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = mul_mod(a.c[i], s, a.q);
    r.normalize();
    return r;
}

ModPoly mp_shift(const ModPoly& a, std::size_t n) {
    if (a.is_zero()) return a;
    ModPoly r(a.q);
    r.c.assign(n, 0);
    r.c.insert(r.c.end(), a.c.begin(), a.c.end());
    return r;
}

// schoolbook with lazy reduction: accumulate 128-bit sums
static std::vector<std::uint64_t> mul_school(const std::vector<std::uint64_t>& a,
                                             const std::vector<std::uint64_t>& b, std::uint64_t q) {
    std::vector<std::uint64_t> out(a.size() + b.size() - 1, 0);
    for (std::size_t k = 0; k < out.size(); ++k) {
        unsigned __int128 acc = 0;
        std::size_t lo = k >= b.size() - 1 ? k - (b.size() - 1) : 0;
        std::size_t hi = std::min(k, a.size() - 1);
        for (std::size_t i = lo; i <= hi; ++i) {
            acc += static_cast<unsigned __int128>(a[i]) * b[k - i];
            if ((i & 15) == 15) acc %= q; // keep the accumulator from overflowing
        }
        out[k] = static_cast<std::uint64_t>(acc % q);
    }
    return out;
}

static std::vector<std::uint64_t> mul_rec(const std::vector<std::uint64_t>& a,
                                          const std::vector<std::uint64_t>& b, std::uint64_t q) {
    if (a.empty() || b.empty()) return {};
    if (std::min(a.size(), b.size()) <= g_karatsuba_threshold) return mul_school(a, b, q);
    std::size_t m = (std::max(a.size(), b.size()) + 1) / 2;
    auto split = [m](const std::vector<std::uint64_t>& v) {
        std::vector<std::uint64_t> lo(v.begin(), v.begin() + std::min(m, v.size()));
        std::vector<std::uint64_t> hi(v.size() > m ? v.begin() + m : v.end(), v.end());
        return std::pair(lo, hi);
    };
    auto [a0, a1] = split(a);
    auto [b0, b1] = split(b);
    auto z0 = mul_rec(a0, b0, q);
    auto z2 = mul_rec(a1, b1, q);
    auto addv = [q](std::vector<std::uint64_t> x, const std::vector<std::uint64_t>& y) {
        if (y.size() > x.size()) x.resize(y.size(), 0);
        for (std::size_t i = 0; i < y.size(); ++i) x[i] = add_mod(x[i], y[i], q);
        return x;
    };
    auto z1 = mul_rec(addv(a0, a1), addv(b0, b1), q);
    // z1 -= z0 + z2
    auto subv = [q](std::vector<std::uint64_t>& x, const std::vector<std::uint64_t>& y) {
        if (y.size() > x.size()) x.resize(y.size(), 0);
        for (std::size_t i = 0; i < y.size(); ++i) x[i] = sub_mod(x[i], y[i], q);
    };
    subv(z1, z0);
    subv(z1, z2);
    std::vector<std::uint64_t> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < z0.size(); ++i) out[i] = add_mod(out[i], z0[i], q);
    for (std::size_t i = 0; i < z1.size(); ++i)
        if (i + m < out.size()) out[i + m] = add_mod(out[i + m], z1[i], q);
    for (std::size_t i = 0; i < z2.size(); ++i)
        if (i + 2 * m < out.size()) out[i + 2 * m] = add_mod(out[i + 2 * m], z2[i], q);
    return out;
}

ModPoly mp_mul(const ModPoly& a, const ModPoly& b) {
    check_same_mod(a, b);
    ModPoly r(a.q);
    if (a.is_zero() || b.is_zero()) return r;
    r.c = mul_rec(a.c, b.c, a.q);
    r.normalize();
    return r;
}

void mp_divrem(const ModPoly& a, const ModPoly& b, ModPoly& quo, ModPoly& rem) {
    check_same_mod(a, b);
    if (b.is_zero()) throw std::domain_error("ModPoly division by zero");
    quo = ModPoly(a.q);
    rem = a;
    if (a.degree() < b.degree()) return;
    std::uint64_t q = a.q;
    std::uint64_t inv_lead = inv_mod(b.lc(), q);
    quo.c.assign(a.c.size() - b.c.size() + 1, 0);
    // in-place long division
    std::vector<std::uint64_t>& r = rem.c;
    for (std::size_t k = a.c.size(); k-- >= b.c.size();) {
        if (k >= r.size()) continue;
        std::uint64_t coef = mul_mod(r[k], inv_lead, q);
        if (coef) {
            quo.c[k - (b.c.size() - 1)] = coef;
            for (std::size_t i = 0; i < b.c.size(); ++i) {
                std::size_t idx = k - (b.c.size() - 1) + i;
                r[idx] = sub_mod(r[idx], mul_mod(coef, b.c[i], q), q);
            }
        }
        if (k == b.c.size() - 1) break;
    }
    rem.normalize();
    quo.normalize();
}

ModPoly mp_rem(const ModPoly& a, const ModPoly& b) {
    ModPoly q, r;
    mp_divrem(a, b, q, r);
    return r;
}

ModPoly mp_quo_exact(const ModPoly& a, const ModPoly& b) {
    ModPoly q, r;
    mp_divrem(a, b, q, r);
    if (!r.is_zero()) throw std::domain_error("mp_quo_exact: nonzero remainder");
    return q;
}

ModPoly mp_monic(const ModPoly& a) {
    if (a.is_zero() || a.lc() == 1) return a;
    return mp_scale(a, inv_mod(a.lc(), a.q));
}

ModPoly mp_gcd(const ModPoly& a, const ModPoly& b) {
    ModPoly x = a, y = b;
    while (!y.is_zero()) {
        ModPoly r = mp_rem(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return mp_monic(x);
}

ModPoly mp_derivative(const ModPoly& a) {
    ModPoly r(a.q);
    if (a.c.size() <= 1) return r;
    r.c.resize(a.c.size() - 1);
    for (std::size_t i = 1; i < a.c.size(); ++i) r.c[i - 1] = mul_mod(a.c[i], i % a.q, a.q);
    r.normalize();
    return r;
}

std::uint64_t mp_eval(const ModPoly& a, std::uint64_t x) {
    std::uint64_t r = 0;
    x %= a.q;
    for (std::size_t i = a.c.size(); i-- > 0;) r = add_mod(mul_mod(r, x, a.q), a.c[i], a.q);
    return r;
}

ModPoly powmod_poly(const ModPoly& base, const Int& e, const ModPoly& m) {
    if (m.is_zero()) throw std::domain_error("powmod_poly: zero modulus polynomial");
    if (m.degree() < 1) throw std::domain_error("powmod_poly: constant modulus polynomial");
    if (e < 0) throw std::domain_error("powmod_poly: negative exponent");
    ModPoly result = mp_rem(mp_const(base.q, 1), m);
    ModPoly b = mp_rem(base, m);
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0) return result;
    for (std::size_t i = bits; i-- > 0;) {
        result = mp_rem(mp_mul(result, result), m);
        if (mpz_tstbit(e.get_mpz_t(), i)) result = mp_rem(mp_mul(result, b), m);
    }
    return result;
}

ModPoly mp_random(std::uint64_t q, long max_deg, std::mt19937_64& rng) {
    ModPoly r(q);
    std::uniform_int_distribution<std::uint64_t> dist(0, q - 1);
    r.c.resize(max_deg + 1);
    for (auto& v : r.c) v = dist(rng);
    r.normalize();
    return r;
}

} // namespace ttower
