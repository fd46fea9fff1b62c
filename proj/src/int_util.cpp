#include "ttower/int_util.hpp"

#include <algorithm>

namespace ttower {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t q) {
    std::uint64_t r = 1 % q;
    base %= q;
    while (e) {
        if (e & 1) r = mul_mod(r, base, q);
        base = mul_mod(base, base, q);
        e >>= 1;
    }
    return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t q) {
    // extended euclid on signed 128-bit accumulators
    __int128 t = 0, newt = 1;
    std::uint64_t r = q, newr = a % q;
    while (newr != 0) {
        std::uint64_t quo = r / newr;
        __int128 tmp = t - static_cast<__int128>(quo) * newt;
        t = newt;
        newt = tmp;
        std::uint64_t tmpr = r - quo * newr;
        r = newr;
        newr = tmpr;
    }
    if (r != 1) throw std::domain_error("inv_mod: not invertible");
    if (t < 0) t += q;
    return static_cast<std::uint64_t>(t);
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // this base set is a proven deterministic test for n < 2^64
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = pow_mod(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

std::uint64_t next_prime_u64(std::uint64_t n) {
    std::uint64_t c = n + 1;
    if (c <= 2) return 2;
    if ((c & 1) == 0) ++c;
    while (!is_prime_u64(c)) c += 2;
    return c;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b) { std::uint64_t t = a % b; a = b; b = t; }
    return a;
}

std::map<std::uint64_t, unsigned> factorize_u64(std::uint64_t n) {
    if (n == 0) throw std::domain_error("factorize_u64: zero");
    std::map<std::uint64_t, unsigned> f;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        while (n % p == 0) { ++f[p]; n /= p; }
    }
    if (n > 1) ++f[n];
    return f;
}

std::uint64_t euler_phi_u64(std::uint64_t n) {
    std::uint64_t r = n;
    for (auto& [p, e] : factorize_u64(n)) {
        (void)e;
        r -= r / p;
    }
    return r;
}

unsigned valuation_u64(std::uint64_t n, std::uint64_t p) {
    if (n == 0) throw std::domain_error("valuation of zero");
    unsigned v = 0;
    while (n % p == 0) { n /= p; ++v; }
    return v;
}

std::uint64_t mult_order_u64(std::uint64_t a, std::uint64_t m) {
    if (gcd_u64(a % m, m) != 1) throw std::domain_error("mult_order: not a unit");
    std::uint64_t phi = euler_phi_u64(m);
    std::uint64_t order = phi;
    for (auto& [p, e] : factorize_u64(phi)) {
        (void)e;
        while (order % p == 0 && pow_mod(a % m, order / p, m) == 1) order /= p;
    }
    return order;
}

std::vector<std::uint64_t> divisors_u64(std::uint64_t n) {
    std::vector<std::uint64_t> d{1};
    for (auto& [p, e] : factorize_u64(n)) {
        std::size_t m = d.size();
        std::uint64_t pk = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < m; ++j) d.push_back(d[j] * pk);
        }
    }
    std::sort(d.begin(), d.end());
    return d;
}

Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Int mod_pow_int(const Int& base, const Int& e, const Int& m) {
    Int r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

std::uint64_t int_mod(const Int& z, std::uint64_t q) {
    Int r = z % Int(static_cast<unsigned long>(q));
    if (r < 0) r += Int(static_cast<unsigned long>(q));
    return to_u64(r);
}

std::uint64_t rat_mod(const Rat& r, std::uint64_t q) {
    std::uint64_t den = int_mod(r.get_den(), q);
    if (den == 0) throw std::domain_error("rat_mod: denominator divisible by modulus");
    return mul_mod(int_mod(r.get_num(), q), inv_mod(den, q), q);
}

} // namespace ttower
