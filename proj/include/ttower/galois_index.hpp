#ifndef TTOWER_GALOIS_INDEX_HPP
#define TTOWER_GALOIS_INDEX_HPP

#include <cstdint>
#include <vector>

#include "ttower/int_util.hpp"

namespace ttower {

// parametrized Borel-type subgroup of GL2(Z/p^k): upper triangular matrices
// with (1,1) entry in a_range, (2,2) entry in b_range, free upper entry
struct BorelSpec {
    std::uint64_t p = 5;
    unsigned k = 2;
    std::vector<std::uint64_t> a_range; // subgroup of (Z/p^k)^x
    std::vector<std::uint64_t> b_range;

    std::uint64_t modulus() const;
};

// |GL2(Z/p^k)| = p^{4(k-1)} (p^2-1)(p^2-p)
Int gl2_order(std::uint64_t p, unsigned k);

// |a_range| * |b_range| * p^k
Int borel_order(const BorelSpec& spec);

struct GreenbergIndexResult {
    Int index;
    bool divisible_by_25 = false;
    bool divisible_by_150 = false;
};

// index of the Borel bound group in GL2; flags the divisibilities that drive
// the order-25 contradiction
GreenbergIndexResult greenberg_index_check(const BorelSpec& spec);

// multiplicative order of g mod m, plus the subgroup it generates
struct CyclicSubgroup {
    std::uint64_t order;
    std::vector<std::uint64_t> elements; // sorted
};
CyclicSubgroup subgroup_order_cyclic(std::uint64_t m, std::uint64_t generator);

// brute-force cross-checks (test oracles; feasible for moduli <= 25)
Int gl2_order_by_enumeration(std::uint64_t pk);
Int borel_order_by_enumeration(const BorelSpec& spec);

// the bound group of the order-25 argument: a in (Z/25)^x, b in <7>
BorelSpec order25_bound_group();

} // namespace ttower

#endif
