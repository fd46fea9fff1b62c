#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ttower/mod_factor.hpp"

using namespace ttower;

TEST_CASE("modular polynomial product") {
    // (x+1)(x-1) = x^2 - 1 mod 7
    ModPoly a(7, {1, 1}), b(7, {6, 1});
    CHECK(mp_mul(a, b) == ModPoly(7, {6, 0, 1}));
    // zero annihilates
    CHECK(mp_mul(ModPoly(7), a).is_zero());
    // mod 5: (2x^2+3)(x+4) -> 2x^3+3x^2+3x+2
    CHECK(mp_mul(ModPoly(5, {3, 0, 2}), ModPoly(5, {4, 1})) == ModPoly(5, {2, 3, 3, 2}));
    // degree additivity
    CHECK(mp_mul(a, b).degree() == a.degree() + b.degree());
    // modulus mismatch
    CHECK_THROWS_AS(mp_mul(ModPoly(5, {1}), ModPoly(7, {1})), std::invalid_argument);
}

TEST_CASE("karatsuba matches schoolbook") {
    std::mt19937_64 rng(7);
    std::size_t saved = g_karatsuba_threshold;
    for (int i = 0; i < 12; ++i) {
        ModPoly a = mp_random(97, 120, rng);
        ModPoly b = mp_random(97, 95, rng);
        g_karatsuba_threshold = 8;
        ModPoly fast = mp_mul(a, b);
        g_karatsuba_threshold = 100000;
        ModPoly slow = mp_mul(a, b);
        CHECK(fast == slow);
    }
    g_karatsuba_threshold = saved;
}

TEST_CASE("powmod_poly") {
    ModPoly m(7, {1, 0, 1}); // x^2 + 1
    CHECK(powmod_poly(mp_x(7), Int(1), m) == mp_x(7));
    // x^2 = -1, so x^4 = 1
    CHECK(powmod_poly(mp_x(7), Int(4), m) == mp_const(7, 1));
    CHECK_THROWS_AS(powmod_poly(mp_x(7), Int(3), ModPoly(7)), std::domain_error);

    // agrees with naive repeated multiplication for e <= 64
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 8; ++trial) {
        ModPoly f = mp_random(31, 8, rng);
        if (f.degree() < 1) continue;
        ModPoly base = mp_random(31, 6, rng);
        ModPoly acc = mp_rem(mp_const(31, 1), f);
        for (unsigned e = 0; e <= 64; ++e) {
            CHECK(powmod_poly(base, Int(e), f) == acc);
            acc = mp_rem(mp_mul(acc, base), f);
        }
    }
    // x^q mod f is the Frobenius image: q-th power of each root
    for (std::uint64_t q : {5ull, 19ull, 31ull}) {
        ModPoly f = mp_random(q, 8, rng);
        if (f.degree() < 2) continue;
        ModPoly frob = powmod_poly(mp_x(q), Int(static_cast<unsigned long>(q)), f);
        ModPoly naive = mp_rem(mp_const(q, 1), f);
        for (std::uint64_t i = 0; i < q; ++i) naive = mp_rem(mp_mul(naive, mp_x(q)), f);
        CHECK(frob == naive);
    }
}

TEST_CASE("count_roots_mod_q examples and brute force") {
    CHECK(count_roots_mod_q(ModPoly(7, {6, 0, 1})) == 2); // x^2-1 mod 7
    CHECK(count_roots_mod_q(ModPoly(7, {1, 0, 1})) == 0); // x^2+1 mod 7
    CHECK(count_roots_mod_q(ModPoly(5, {0, 4, 0, 1})) == 3); // x^3-x mod 5
    CHECK_THROWS_AS(count_roots_mod_q(ModPoly(7)), std::domain_error);

    std::mt19937_64 rng(3);
    for (std::uint64_t q : {3ull, 5ull, 97ull, 199ull}) {
        for (int i = 0; i < 6; ++i) {
            ModPoly f = mp_random(q, 10, rng);
            if (f.is_zero()) continue;
            unsigned brute = 0;
            for (std::uint64_t x = 0; x < q; ++x)
                if (mp_eval(f, x) == 0) ++brute;
            CHECK(count_roots_mod_q(f) == brute);
        }
    }
}

TEST_CASE("factor_mod_q examples") {
    // x^2 - 1 mod 7 = (x+1)(x+6)
    auto f1 = factor_mod_q(ModPoly(7, {6, 0, 1}));
    REQUIRE(f1.factors.size() == 2);
    CHECK(f1.factors[0].first == ModPoly(7, {1, 1}));
    CHECK(f1.factors[1].first == ModPoly(7, {6, 1}));

    // x^4 + 1 mod 3: two irreducible quadratics (brute-force cross-check below)
    auto f2 = factor_mod_q(ModPoly(3, {1, 0, 0, 0, 1}));
    REQUIRE(f2.factors.size() == 2);
    CHECK(f2.factors[0].first.degree() == 2);
    CHECK(f2.factors[1].first.degree() == 2);
    // enumeration oracle: no monic linear divides x^4+1 mod 3
    for (std::uint64_t r = 0; r < 3; ++r) CHECK(mp_eval(ModPoly(3, {1, 0, 0, 0, 1}), r) != 0);

    // Phi_5 mod 11 splits into four linears (11 = 1 mod 5)
    auto f3 = factor_mod_q(ModPoly(11, {1, 1, 1, 1, 1}));
    CHECK(f3.factors.size() == 4);
    for (auto& [g, e] : f3.factors) {
        CHECK(g.degree() == 1);
        CHECK(e == 1);
    }

    CHECK_THROWS_AS(factor_mod_q(ModPoly(2, {1, 1})), std::domain_error);
}

TEST_CASE("factor_mod_q round-trip and determinism") {
    std::mt19937_64 rng(5);
    for (std::uint64_t q : {5ull, 31ull, 97ull}) {
        for (int i = 0; i < 10; ++i) {
            ModPoly f = mp_random(q, 32, rng);
            if (f.degree() < 1) continue;
            auto fac = factor_mod_q(f, 0);
            ModPoly prod = mp_const(q, fac.lc);
            for (auto& [g, e] : fac.factors)
                for (unsigned k = 0; k < e; ++k) prod = mp_mul(prod, g);
            CHECK(prod == f);
            // deterministic output for a fixed seed
            auto fac2 = factor_mod_q(f, 0);
            REQUIRE(fac.factors.size() == fac2.factors.size());
            for (std::size_t k = 0; k < fac.factors.size(); ++k)
                CHECK(fac.factors[k].first == fac2.factors[k].first);
            // ordering: by degree then lexicographic
            for (std::size_t k = 1; k < fac.factors.size(); ++k) {
                const auto& prev = fac.factors[k - 1].first;
                const auto& cur = fac.factors[k].first;
                CHECK(prev.degree() <= cur.degree());
                if (prev.degree() == cur.degree()) CHECK(prev.c <= cur.c);
            }
        }
    }
}
