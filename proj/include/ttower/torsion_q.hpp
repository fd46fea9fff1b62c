#ifndef TTOWER_TORSION_Q_HPP
#define TTOWER_TORSION_Q_HPP

#include <vector>

#include "ttower/curve.hpp"
#include "ttower/ec_point.hpp"
#include "ttower/rat_factor.hpp"

namespace ttower {

// torsion structure Z/a + Z/b with a | b; a = 1 for cyclic groups
struct TorsionStructure {
    long a = 1;
    long b = 1;

    long order() const { return a * b; }
    bool operator==(const TorsionStructure& o) const { return a == o.a && b == o.b; }
    std::string str() const;
};

struct TorsionQResult {
    TorsionStructure group;
    std::vector<ECPoint<Rat>> generators; // one point of exact order b (and one of order a if a > 1)
    long reduction_bound = 0;             // gcd of #E(F_q) over the sampled primes
};

// exact E(Q)_tors: reduction bounds first, then exact point search through
// division-polynomial rational roots; the bound is never trusted alone
TorsionQResult torsion_over_Q(const Curve& E, const FactorConfig& cfg = {});

// group allowed by Mazur's theorem?
bool mazur_allows(const TorsionStructure& t);

} // namespace ttower

#endif
