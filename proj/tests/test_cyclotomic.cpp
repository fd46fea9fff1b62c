#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ttower/gaussian_period.hpp"
#include "ttower/mod_factor.hpp"

using namespace ttower;

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_poly(4) == RationalPoly::from_ints({1, 0, 1}));
    CHECK(cyclotomic_poly(9) == RationalPoly::from_ints({1, 0, 0, 1, 0, 0, 1}));
    // Phi_15 = (x^15-1)(x-1) / ((x^5-1)(x^3-1)) by polynomial division
    RationalPoly x15, x5, x3, x1;
    x15.c.assign(16, Rat(0)); x15.c[0] = -1; x15.c[15] = 1;
    x5.c.assign(6, Rat(0)); x5.c[0] = -1; x5.c[5] = 1;
    x3.c.assign(4, Rat(0)); x3.c[0] = -1; x3.c[3] = 1;
    x1.c = {Rat(-1), Rat(1)};
    RationalPoly expect = rp_quo_exact(rp_mul(x15, x1), rp_mul(x5, x3));
    CHECK(cyclotomic_poly(15) == expect);
    CHECK(cyclotomic_poly(15).degree() == 8);
}

TEST_CASE("automorphisms") {
    // identity
    CycloElement a = ce_add(ce_zeta_pow(7, 1), ce_mul(ce_from_rat(7, Rat(3)), ce_zeta_pow(7, 4)));
    CHECK(automorphism(1, a) == a);
    // composition is multiplicative on random elements for all m <= 40
    std::mt19937_64 rng(9);
    for (std::uint64_t m = 3; m <= 40; ++m) {
        const CycloField& F = CycloField::get(m);
        RationalPoly rep;
        for (unsigned i = 0; i < F.degree; ++i) rep.c.emplace_back(static_cast<long>(rng() % 19) - 9);
        rep.normalize();
        CycloElement x{m, rep};
        std::vector<std::uint64_t> units;
        for (std::uint64_t c = 2; c < m && units.size() < 3; ++c)
            if (gcd_u64(c, m) == 1) units.push_back(c);
        for (std::uint64_t c : units)
            for (std::uint64_t d : units)
                CHECK(automorphism(c, automorphism(d, x)) == automorphism((c * d) % m, x));
    }
    // complex conjugation fixes zeta9 + zeta9^-1
    CycloElement r9 = ce_add(ce_zeta_pow(9, 1), ce_zeta_pow(9, 8));
    CHECK(automorphism(8, r9) == r9);
    CHECK_THROWS_AS(automorphism(3, r9), std::invalid_argument);
}

TEST_CASE("layer presentations") {
    auto sp21 = build_layer_presentation(2, 1);
    CHECK(sp21.degree == 2);
    CHECK(sp21.eta_minpoly == RationalPoly::from_ints({-2, 0, 1}));
    CHECK(period_minpoly_by_resultant(sp21) == sp21.eta_minpoly);

    auto sp31 = build_layer_presentation(3, 1);
    CHECK(sp31.degree == 3);
    CHECK(sp31.eta_minpoly == RationalPoly::from_ints({1, -3, 0, 1}));
    CHECK(period_minpoly_by_resultant(sp31) == sp31.eta_minpoly);

    // Q_{1,5}: fixed by the order-4 subgroup <7> = {1, 7, 18, 24} of (Z/25)^x
    auto sp51 = build_layer_presentation(5, 1);
    CHECK(sp51.degree == 5);
    CHECK(sp51.delta == std::vector<std::uint64_t>{1, 7, 18, 24});
    CHECK(is_delta_fixed(sp51, sp51.eta));

    // minimal polynomials are irreducible: mod-prime degree-pattern certificate
    for (const auto* sp : {&sp21, &sp31, &sp51}) {
        auto [c, h] = rp_to_int(sp->eta_minpoly);
        (void)c;
        bool certified = false;
        std::uint64_t p = 3;
        for (int tries = 0; tries < 300 && !certified; ++tries) {
            p = next_prime_u64(p);
            if (int_mod(h.lc(), p) == 0) continue;
            ModPoly hp = ip_to_mod(h, p);
            if (hp.degree() != h.degree()) continue;
            certified = is_irreducible_mod_q(hp);
        }
        CHECK(certified);
    }

    // degree = phi(m) / |Delta|
    CHECK(sp51.eta_minpoly.degree() * static_cast<long>(sp51.delta.size()) ==
          static_cast<long>(euler_phi_u64(sp51.ambient_m)));

    // layer numbering convention: Q_{1,2} = Q(sqrt 2) (conductor 8)
    CHECK(sp21.ambient_m == 8);
}

TEST_CASE("roots in cyclotomic fields") {
    // x^2 - 2 has two roots in Q(zeta_8), both Delta-fixed in the real subfield
    auto sp21 = build_layer_presentation(2, 1);
    NumberField F = sp21.as_number_field();
    RationalPoly f = RationalPoly::from_ints({-2, 0, 1});
    auto roots = nf_roots_of(F, f);
    REQUIRE(roots.size() == 2);
    for (auto& r : roots) {
        CHECK(nf_eval_poly(F, f, r).is_zero());
        CycloElement amb = to_ambient(sp21, r);
        CHECK(is_delta_fixed(sp21, amb));
        // the root is zeta8 - zeta8^3 up to sign
        CycloElement ref = ce_sub(ce_zeta_pow(8, 1), ce_zeta_pow(8, 3));
        CHECK((amb == ref || amb == ce_neg(ref)));
    }

    // no root in Q(zeta_5): its unique quadratic subfield is Q(sqrt 5)
    auto f5 = build_cyclo_subfield_presentation(5, 1, 4);
    CHECK(nf_roots_of(f5.as_number_field(), f).empty());

    // x^3 - 3x + 1 splits in Q(zeta_9)
    auto f9 = build_cyclo_subfield_presentation(3, 2, 6);
    RationalPoly cubic = RationalPoly::from_ints({1, -3, 0, 1});
    auto roots9 = nf_roots_of(f9.as_number_field(), cubic);
    CHECK(roots9.size() == 3);
    for (auto& r : roots9) CHECK(nf_eval_poly(f9.as_number_field(), cubic, r).is_zero());
    CHECK(roots9.size() <= 3); // never more roots than the degree
}

TEST_CASE("squares in cyclotomic fields") {
    auto sp21 = build_layer_presentation(2, 1);
    NumberField F = sp21.as_number_field();
    CHECK(nf_sqrt(F, nf_from_rat(F, Rat(4)))->rational_value() == 2);
    auto s2 = nf_sqrt(F, nf_from_rat(F, Rat(2)));
    REQUIRE(s2.has_value());
    CHECK(nf_mul(F, *s2, *s2).rational_value() == 2);

    auto f3 = build_cyclo_subfield_presentation(3, 1, 2);
    NumberField F3 = f3.as_number_field();
    CHECK(!nf_sqrt(F3, nf_from_rat(F3, Rat(2))).has_value());

    // is_square(x^2) recovers a square root of x^2 for random field elements
    std::mt19937_64 rng(5);
    auto sp31 = build_layer_presentation(3, 1);
    NumberField F31 = sp31.as_number_field();
    for (int i = 0; i < 5; ++i) {
        RationalPoly rep;
        for (unsigned j = 0; j < F31.degree; ++j) rep.c.emplace_back(static_cast<long>(rng() % 7) - 3);
        rep.normalize();
        NFElem x{rp_rem(rep, ip_to_rat(F31.h))};
        NFElem sq = nf_mul(F31, x, x);
        auto root = nf_sqrt(F31, sq);
        REQUIRE(root.has_value());
        CHECK(nf_mul(F31, *root, *root) == sq);
    }
}

TEST_CASE("compositum presentations") {
    auto comp = build_compositum_presentation(
        {build_layer_presentation(2, 1), build_layer_presentation(3, 1)});
    CHECK(comp.degree == 6);
    CHECK(comp.eta_minpoly.degree() == 6);
    CHECK(comp.ambient_m == 72);
    // the generator satisfies its minimal polynomial in the ambient field
    CycloElement val = ce_eval_poly(comp.eta_minpoly, comp.eta);
    CHECK(val.is_zero());
    CHECK(is_delta_fixed(comp, comp.eta));
}
