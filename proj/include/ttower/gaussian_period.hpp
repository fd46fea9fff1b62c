#ifndef TTOWER_GAUSSIAN_PERIOD_HPP
#define TTOWER_GAUSSIAN_PERIOD_HPP

#include <cstdint>
#include <vector>

#include "ttower/cyclotomic.hpp"
#include "ttower/number_field.hpp"

namespace ttower {

// A subfield of Q(zeta_m) presented by a Gaussian period: the fixed field of
// Delta <= (Z/m)^x, generated by eta = sum_{c in Delta} zeta_m^c.
struct SubfieldPresentation {
    std::uint64_t ambient_m = 1;
    std::vector<std::uint64_t> delta; // sorted residues, a subgroup containing 1
    CycloElement eta;                 // the period, in the ambient field
    RationalPoly eta_minpoly;         // monic, integer coefficients
    unsigned degree = 1;              // phi(m) / |Delta|

    NumberField as_number_field() const;
};

// layer Q_{n,p}: for odd p the degree-p^n subfield of Q(zeta_{p^{n+1}});
// for p = 2 the real subfield of Q(zeta_{2^{n+2}}), so Q_{1,2} = Q(sqrt 2)
SubfieldPresentation build_layer_presentation(std::uint64_t p, unsigned n);

// the unique subfield of Q(zeta_{p^k}) of degree d (p odd, cyclic case);
// d = phi(p^k) gives the full field presented by a period for Delta = {1}
SubfieldPresentation build_cyclo_subfield_presentation(std::uint64_t p, unsigned k, std::uint64_t d);

// compositum of presentations with pairwise coprime ambient conductors;
// generator is a sum of scaled periods, minimal polynomial via resultants
SubfieldPresentation build_compositum_presentation(const std::vector<SubfieldPresentation>& parts);

// minimal polynomial of eta computed independently by resultant elimination
// (test oracle for the CRT construction used internally)
RationalPoly period_minpoly_by_resultant(const SubfieldPresentation& sp);

bool is_delta_fixed(const SubfieldPresentation& sp, const CycloElement& a);

// express a presented-field element in the ambient cyclotomic field
CycloElement to_ambient(const SubfieldPresentation& sp, const NFElem& a);

} // namespace ttower

#endif
