#ifndef TTOWER_MOD_FACTOR_HPP
#define TTOWER_MOD_FACTOR_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "ttower/mod_poly.hpp"

namespace ttower {

// number of distinct roots of f in Z/q, as deg gcd(f, x^q - x)
unsigned count_roots_mod_q(const ModPoly& f);

// all roots of f in Z/q (ascending); intended for small q or small root sets
std::vector<std::uint64_t> roots_mod_q(const ModPoly& f);

struct ModFactorization {
    std::uint64_t lc = 1; // overall unit
    std::vector<std::pair<ModPoly, unsigned>> factors; // monic irreducible, multiplicity
};

// complete irreducible factorization over Z/q (q odd prime).
// output order: by degree, then lexicographic on coefficient vectors.
// equal-degree splitting draws from a generator seeded by `seed`.
ModFactorization factor_mod_q(const ModPoly& f, std::uint64_t seed = 0);

bool is_irreducible_mod_q(const ModPoly& f);

// degrees of irreducible factors (with multiplicity), cheaper than full factorization
std::vector<long> factor_degrees_mod_q(const ModPoly& f);

} // namespace ttower

#endif
