#include "ttower/rat_poly.hpp"

#include <sstream>
#include <stdexcept>

namespace ttower {

static const Rat kZeroRat(0);
static const Int kZeroInt(0);

RationalPoly RationalPoly::from_ints(const std::vector<long>& v) {
    std::vector<Rat> c;
    c.reserve(v.size());
    for (long x : v) c.emplace_back(x);
    return RationalPoly(std::move(c));
}

void RationalPoly::normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
    for (auto& v : c) v.canonicalize();
}

const Rat& RationalPoly::lc() const {
    if (c.empty()) return kZeroRat;
    return c.back();
}

std::string RationalPoly::str() const {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        Rat v = c[i];
        if (first) {
            if (v < 0) os << "-";
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        first = false;
        Rat a = abs(v);
        if (i == 0 || a != 1) os << a.get_str();
        if (i >= 1) {
            os << (a != 1 ? "*x" : "x");
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

RationalPoly rp_const(const Rat& v) {
    RationalPoly r;
    if (v != 0) r.c.push_back(v);
    return r;
}

RationalPoly rp_x() { return rp_xpow(1); }

RationalPoly rp_xpow(std::size_t n) {
    RationalPoly r;
    r.c.assign(n + 1, Rat(0));
    r.c[n] = 1;
    return r;
}

RationalPoly rp_add(const RationalPoly& a, const RationalPoly& b) {
    RationalPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.coeff(i) + b.coeff(i);
    r.normalize();
    return r;
}

RationalPoly rp_sub(const RationalPoly& a, const RationalPoly& b) {
    RationalPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.coeff(i) - b.coeff(i);
    r.normalize();
    return r;
}

RationalPoly rp_neg(const RationalPoly& a) {
    RationalPoly r = a;
    for (auto& v : r.c) v = -v;
    return r;
}

RationalPoly rp_scale(const RationalPoly& a, const Rat& s) {
    if (s == 0) return {};
    RationalPoly r = a;
    for (auto& v : r.c) v *= s;
    return r;
}

RationalPoly rp_mul(const RationalPoly& a, const RationalPoly& b) {
    RationalPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) {
            if (b.c[j] == 0) continue;
            r.c[i + j] += a.c[i] * b.c[j];
        }
    }
    r.normalize();
    return r;
}

void rp_divrem(const RationalPoly& a, const RationalPoly& b, RationalPoly& quo, RationalPoly& rem) {
    if (b.is_zero()) throw std::domain_error("RationalPoly division by zero");
    quo = RationalPoly();
    rem = a;
    if (a.is_zero() || a.degree() < b.degree()) return;
    quo.c.assign(a.c.size() - b.c.size() + 1, Rat(0));
    Rat inv_lead = 1 / b.lc();
    for (std::size_t k = rem.c.size(); k-- >= b.c.size();) {
        if (k < rem.c.size() && rem.c[k] != 0) {
            Rat coef = rem.c[k] * inv_lead;
            quo.c[k - (b.c.size() - 1)] = coef;
            for (std::size_t i = 0; i < b.c.size(); ++i) rem.c[k - (b.c.size() - 1) + i] -= coef * b.c[i];
        }
        if (k == b.c.size() - 1) break;
    }
    rem.normalize();
    quo.normalize();
}

RationalPoly rp_rem(const RationalPoly& a, const RationalPoly& b) {
    RationalPoly q, r;
    rp_divrem(a, b, q, r);
    return r;
}

RationalPoly rp_quo_exact(const RationalPoly& a, const RationalPoly& b) {
    RationalPoly q, r;
    rp_divrem(a, b, q, r);
    if (!r.is_zero()) throw std::domain_error("rp_quo_exact: nonzero remainder");
    return q;
}

RationalPoly rp_monic(const RationalPoly& a) {
    if (a.is_zero() || a.lc() == 1) return a;
    return rp_scale(a, 1 / a.lc());
}

RationalPoly rp_gcd(const RationalPoly& a, const RationalPoly& b) {
    RationalPoly x = a, y = b;
    while (!y.is_zero()) {
        RationalPoly r = rp_rem(x, y);
        // renormalize to tame coefficient growth
        if (!r.is_zero()) r = rp_monic(r);
        x = std::move(y);
        y = std::move(r);
    }
    return rp_monic(x);
}

RationalPoly rp_derivative(const RationalPoly& a) {
    RationalPoly r;
    if (a.c.size() <= 1) return r;
    r.c.resize(a.c.size() - 1);
    for (std::size_t i = 1; i < a.c.size(); ++i) r.c[i - 1] = a.c[i] * Rat(static_cast<long>(i));
    r.normalize();
    return r;
}

Rat rp_eval(const RationalPoly& a, const Rat& x) {
    Rat r(0);
    for (std::size_t i = a.c.size(); i-- > 0;) r = r * x + a.c[i];
    return r;
}

RationalPoly rp_compose_linear(const RationalPoly& a, const Rat& u, const Rat& v) {
    // Horner over the polynomial ring with b = u*x + v
    RationalPoly b;
    b.c = {v, u};
    b.normalize();
    return rp_compose(a, b);
}

RationalPoly rp_compose(const RationalPoly& a, const RationalPoly& b) {
    RationalPoly r;
    for (std::size_t i = a.c.size(); i-- > 0;) {
        r = rp_mul(r, b);
        r = rp_add(r, rp_const(a.c[i]));
    }
    return r;
}

ModPoly rp_to_mod(const RationalPoly& a, std::uint64_t q) {
    ModPoly r(q);
    r.c.resize(a.c.size());
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = rat_mod(a.c[i], q);
    r.normalize();
    return r;
}

// ---- IntPoly ----

void IntPoly::normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

const Int& IntPoly::lc() const {
    if (c.empty()) return kZeroInt;
    return c.back();
}

IntPoly ip_add(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Int(0));
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.coeff(i) + b.coeff(i);
    r.normalize();
    return r;
}

IntPoly ip_sub(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Int(0));
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.coeff(i) - b.coeff(i);
    r.normalize();
    return r;
}

IntPoly ip_mul(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    }
    r.normalize();
    return r;
}

IntPoly ip_scale(const IntPoly& a, const Int& s) {
    if (s == 0) return {};
    IntPoly r = a;
    for (auto& v : r.c) v *= s;
    return r;
}

IntPoly ip_derivative(const IntPoly& a) {
    IntPoly r;
    if (a.c.size() <= 1) return r;
    r.c.resize(a.c.size() - 1);
    for (std::size_t i = 1; i < a.c.size(); ++i) r.c[i - 1] = a.c[i] * static_cast<long>(i);
    r.normalize();
    return r;
}

Int ip_eval(const IntPoly& a, const Int& x) {
    Int r(0);
    for (std::size_t i = a.c.size(); i-- > 0;) r = r * x + a.c[i];
    return r;
}

Int ip_content(const IntPoly& a) {
    Int g(0);
    for (const auto& v : a.c) {
        Int av = abs(v);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), av.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly ip_primitive(const IntPoly& a) {
    if (a.is_zero()) return a;
    Int g = ip_content(a);
    if (a.lc() < 0) g = -g;
    IntPoly r = a;
    for (auto& v : r.c) v /= g;
    return r;
}

ModPoly ip_to_mod(const IntPoly& a, std::uint64_t q) {
    ModPoly r(q);
    r.c.resize(a.c.size());
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = int_mod(a.c[i], q);
    r.normalize();
    return r;
}

bool ip_divides(const IntPoly& d, const IntPoly& a) {
    if (d.is_zero()) return a.is_zero();
    if (a.is_zero()) return true;
    if (a.degree() < d.degree()) return false;
    // synthetic division over Z with exactness checks
    std::vector<Int> r = a.c;
    long dd = d.degree();
    for (long k = a.degree(); k >= dd; --k) {
        Int& top = r[k];
        if (top == 0) continue;
        Int quo, rem;
        mpz_tdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), top.get_mpz_t(), d.lc().get_mpz_t());
        if (rem != 0) return false;
        for (long i = 0; i <= dd; ++i) r[k - dd + i] -= quo * d.c[i];
    }
    for (const auto& v : r)
        if (v != 0) return false;
    return true;
}

IntPolyWithContent rp_to_int(const RationalPoly& f) {
    IntPolyWithContent out;
    if (f.is_zero()) {
        out.content = 0;
        return out;
    }
    Int den(1);
    for (const auto& v : f.c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den().get_mpz_t());
    IntPoly ip;
    ip.c.reserve(f.c.size());
    for (const auto& v : f.c) {
        Rat scaled = v * Rat(den);
        scaled.canonicalize();
        ip.c.push_back(scaled.get_num());
    }
    ip.normalize();
    Int cont = ip_content(ip);
    if (ip.lc() < 0) cont = -cont;
    for (auto& v : ip.c) v /= cont;
    out.prim = std::move(ip);
    out.content = Rat(cont) / Rat(den);
    out.content.canonicalize();
    return out;
}

RationalPoly ip_to_rat(const IntPoly& f) {
    RationalPoly r;
    r.c.reserve(f.c.size());
    for (const auto& v : f.c) r.c.emplace_back(v);
    r.normalize();
    return r;
}

Int ip_norm2_ceil(const IntPoly& f) {
    Int s(0);
    for (const auto& v : f.c) s += v * v;
    Int root, rem;
    mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), s.get_mpz_t());
    if (rem != 0) root += 1;
    return root;
}

} // namespace ttower
