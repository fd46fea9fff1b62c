#ifndef TTOWER_NUMBER_FIELD_HPP
#define TTOWER_NUMBER_FIELD_HPP

#include <optional>
#include <vector>

#include "ttower/rat_factor.hpp"
#include "ttower/rat_poly.hpp"

namespace ttower {

// A number field presented as Q[y]/(h) with h monic irreducible with integer
// coefficients. Used for the Gaussian-period subfield presentations and their
// composita.
struct NumberField {
    IntPoly h;
    unsigned degree = 1;

    static NumberField rationals(); // h = y
};

NumberField make_number_field(const IntPoly& h_monic);

// element of Q[y]/(h), rep degree < deg h
struct NFElem {
    RationalPoly rep;

    bool is_zero() const { return rep.is_zero(); }
    bool is_rational() const { return rep.degree() <= 0; }
    Rat rational_value() const { return rep.is_zero() ? Rat(0) : rep.c[0]; }
    bool operator==(const NFElem& o) const { return rep == o.rep; }
};

NFElem nf_from_rat(const NumberField& F, const Rat& v);
NFElem nf_gen(const NumberField& F); // the class of y
NFElem nf_add(const NumberField& F, const NFElem& a, const NFElem& b);
NFElem nf_sub(const NumberField& F, const NFElem& a, const NFElem& b);
NFElem nf_mul(const NumberField& F, const NFElem& a, const NFElem& b);
NFElem nf_neg(const NumberField& F, const NFElem& a);
NFElem nf_inv(const NumberField& F, const NFElem& a);
NFElem nf_div(const NumberField& F, const NFElem& a, const NFElem& b);
// f(a) for f over Q
NFElem nf_eval_poly(const NumberField& F, const RationalPoly& f, const NFElem& a);

// minimal polynomial of a over Q (monic); degree divides F.degree
RationalPoly nf_minimal_polynomial(const NumberField& F, const NFElem& a);

// roots of f (over Q) that lie in F, each verified exactly; count <= deg f.
// max_roots = 0 returns all of them, k > 0 stops after k extractions (the
// remaining roots are Galois conjugates obtainable the same way)
std::vector<NFElem> nf_roots_of(const NumberField& F, const RationalPoly& f,
                                const FactorConfig& cfg = {}, unsigned max_roots = 0);

// a square root of a in F if one exists
std::optional<NFElem> nf_sqrt(const NumberField& F, const NFElem& a, const FactorConfig& cfg = {});

} // namespace ttower

#endif
