#include "ttower/galois_index.hpp"

#include <algorithm>
#include <stdexcept>

namespace ttower {

std::uint64_t BorelSpec::modulus() const {
    std::uint64_t m = 1;
    for (unsigned i = 0; i < k; ++i) m *= p;
    return m;
}

static void check_subgroup(const std::vector<std::uint64_t>& range, std::uint64_t m) {
    if (range.empty()) throw std::invalid_argument("BorelSpec: empty range");
    bool has_one = false;
    for (std::uint64_t a : range) {
        if (gcd_u64(a % m, m) != 1) throw std::invalid_argument("BorelSpec: non-unit in range");
        if (a % m == 1) has_one = true;
    }
    if (!has_one) throw std::invalid_argument("BorelSpec: range must contain 1");
    for (std::uint64_t a : range)
        for (std::uint64_t b : range) {
            std::uint64_t ab = mul_mod(a % m, b % m, m);
            if (!std::binary_search(range.begin(), range.end(), ab))
                throw std::invalid_argument("BorelSpec: range not closed under multiplication");
        }
}

Int gl2_order(std::uint64_t p, unsigned k) {
    if (!is_prime_u64(p) || k < 1) throw std::invalid_argument("gl2_order: prime p, k >= 1");
    Int P(static_cast<unsigned long>(p));
    Int r = pow_int(P, 4 * (k - 1));
    r *= (P * P - 1) * (P * P - P);
    return r;
}

Int borel_order(const BorelSpec& spec) {
    std::uint64_t m = spec.modulus();
    auto a = spec.a_range, b = spec.b_range;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    check_subgroup(a, m);
    check_subgroup(b, m);
    return Int(static_cast<unsigned long>(a.size())) * Int(static_cast<unsigned long>(b.size())) *
           Int(static_cast<unsigned long>(m));
}

GreenbergIndexResult greenberg_index_check(const BorelSpec& spec) {
    Int gl = gl2_order(spec.p, spec.k);
    Int bo = borel_order(spec);
    if (gl % bo != 0) throw std::domain_error("greenberg_index_check: non-integral index");
    GreenbergIndexResult r;
    r.index = gl / bo;
    r.divisible_by_25 = r.index % 25 == 0;
    r.divisible_by_150 = r.index % 150 == 0;
    return r;
}

CyclicSubgroup subgroup_order_cyclic(std::uint64_t m, std::uint64_t generator) {
    if (gcd_u64(generator % m, m) != 1)
        throw std::invalid_argument("subgroup_order_cyclic: generator not a unit");
    CyclicSubgroup s;
    s.order = mult_order_u64(generator % m, m);
    std::uint64_t x = 1;
    for (std::uint64_t i = 0; i < s.order; ++i) {
        s.elements.push_back(x);
        x = mul_mod(x, generator % m, m);
    }
    std::sort(s.elements.begin(), s.elements.end());
    return s;
}

Int gl2_order_by_enumeration(std::uint64_t pk) {
    Int count(0);
    auto fac = factorize_u64(pk);
    if (fac.size() != 1) throw std::invalid_argument("gl2_order_by_enumeration: prime power modulus");
    std::uint64_t p = fac.begin()->first;
    for (std::uint64_t a = 0; a < pk; ++a)
        for (std::uint64_t b = 0; b < pk; ++b)
            for (std::uint64_t c = 0; c < pk; ++c)
                for (std::uint64_t d = 0; d < pk; ++d) {
                    std::uint64_t det = sub_mod(mul_mod(a, d, pk), mul_mod(b, c, pk), pk);
                    if (det % p != 0) ++count;
                }
    return count;
}

Int borel_order_by_enumeration(const BorelSpec& spec) {
    std::uint64_t m = spec.modulus();
    Int count(0);
    auto in_range = [&](const std::vector<std::uint64_t>& r, std::uint64_t v) {
        return std::find(r.begin(), r.end(), v % m) != r.end();
    };
    for (std::uint64_t a = 0; a < m; ++a)
        for (std::uint64_t b = 0; b < m; ++b)
            for (std::uint64_t u = 0; u < m; ++u) {
                if (in_range(spec.a_range, a) && in_range(spec.b_range, b)) ++count;
            }
    return count;
}

BorelSpec order25_bound_group() {
    BorelSpec s;
    s.p = 5;
    s.k = 2;
    for (std::uint64_t a = 1; a < 25; ++a)
        if (a % 5 != 0) s.a_range.push_back(a);
    s.b_range = subgroup_order_cyclic(25, 7).elements;
    return s;
}

} // namespace ttower
