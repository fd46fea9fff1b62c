#ifndef TTOWER_RAT_FACTOR_HPP
#define TTOWER_RAT_FACTOR_HPP

#include <optional>
#include <vector>

#include "ttower/rat_poly.hpp"

namespace ttower {

// thrown when a configured resource cap is exceeded; callers map this to
// an INDETERMINATE verdict, never to a wrong answer
struct resource_exhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FactorConfig {
    std::uint64_t seed = 0;
    unsigned prime_candidates = 5;     // primes sampled when picking the reduction prime
    std::uint64_t subset_budget = 1ull << 22; // recombination trial cap
};

struct FactorizationQ {
    Rat content;
    // irreducible over Q, primitive integer coefficients, positive leading
    // coefficient; sorted by degree then coefficients
    std::vector<std::pair<RationalPoly, unsigned>> factors;
    // nonzero only for capped runs: residual with no factor of degree <= cap
    RationalPoly unfactored;
    unsigned unfactored_multiplicity = 0;
    bool capped = false;

    RationalPoly reassemble() const;
};

// Zassenhaus: squarefree decomposition, factorization mod a good prime,
// quadratic Hensel lifting to a proven Mignotte-style bound, subset
// recombination. With degree_cap set, only factors of degree <= cap are
// split off; the cofactor is reported unfactored but flagged.
FactorizationQ factor_over_Q(const RationalPoly& f, std::optional<long> degree_cap = {},
                             const FactorConfig& cfg = {});

// rational roots of f (the degree-1 factors), via capped factorization
std::vector<Rat> rational_roots(const RationalPoly& f, const FactorConfig& cfg = {});

} // namespace ttower

#endif
