#ifndef TTOWER_INT_UTIL_HPP
#define TTOWER_INT_UTIL_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

namespace ttower {

using Int = mpz_class;
using Rat = mpq_class;

// ---- word-size modular arithmetic (moduli < 2^62) ----

inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
    std::uint64_t s = a + b;
    if (s >= q || s < a) s -= q;
    return s;
}

inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
    return a >= b ? a - b : a + q - b;
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % q);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t q);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t q);

// deterministic Miller-Rabin, valid for all 64-bit inputs
bool is_prime_u64(std::uint64_t n);

// next prime strictly greater than n
std::uint64_t next_prime_u64(std::uint64_t n);

// ---- small integer number theory ----

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

// prime factorization by trial division; fine for the table-sized inputs we use
std::map<std::uint64_t, unsigned> factorize_u64(std::uint64_t n);

std::uint64_t euler_phi_u64(std::uint64_t n);

// v_p(n); v_p(0) is rejected
unsigned valuation_u64(std::uint64_t n, std::uint64_t p);

// multiplicative order of a mod m, gcd(a,m)=1
std::uint64_t mult_order_u64(std::uint64_t a, std::uint64_t m);

std::vector<std::uint64_t> divisors_u64(std::uint64_t n);

// ---- gmp helpers ----

Int pow_int(const Int& base, unsigned long e);
Int mod_pow_int(const Int& base, const Int& e, const Int& m);

inline std::uint64_t to_u64(const Int& z) {
    if (!z.fits_ulong_p()) throw std::overflow_error("integer does not fit in 64 bits");
    return static_cast<std::uint64_t>(z.get_ui());
}

// residue of a rational mod prime q (denominator must be invertible)
std::uint64_t rat_mod(const Rat& r, std::uint64_t q);
std::uint64_t int_mod(const Int& z, std::uint64_t q);

} // namespace ttower

#endif
