#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ttower/mod_factor.hpp"
#include "ttower/resultant.hpp"
#include "ttower/split.hpp"

using namespace ttower;

TEST_CASE("unique subfields of the composita") {
    CHECK(unique_subfield(FieldSpec::tower_K(), 5)->str() == "layer:5.1");
    CHECK(unique_subfield(FieldSpec::tower_K(), 1)->is_rationals());
    CHECK(!unique_subfield(FieldSpec::tower_cyclo(11), 33).has_value());
    CHECK(!unique_subfield(FieldSpec::tower_K5(), 6).has_value());
    CHECK(unique_subfield(FieldSpec::tower_K5(), 35)->str() == "comp(layer:5.1,layer:7.1)");

    for (std::uint64_t d = 1; d <= 50; ++d) {
        auto sub = unique_subfield(FieldSpec::tower_K(), d);
        REQUIRE(sub.has_value());
        CHECK(sub->degree() == d);
        // K5: exists iff no prime factor in {2, 3}
        bool smooth23 = d % 2 == 0 || d % 3 == 0;
        CHECK(unique_subfield(FieldSpec::tower_K5(), d).has_value() == !smooth23);
    }

    // Z_p towers: p-power degrees only
    CHECK(unique_subfield(FieldSpec::tower_Zp(3), 9)->str() == "layer:3.2");
    CHECK(!unique_subfield(FieldSpec::tower_Zp(3), 6).has_value());

    // cyclotomic towers: degree-21 subfield of Q(zeta_49)
    CHECK(unique_subfield(FieldSpec::tower_cyclo(7), 21)->str() == "subcyclo:7^2:21");
    CHECK(unique_subfield(FieldSpec::tower_cyclo(7), 6)->str() == "cyclo:7^1");
    CHECK(unique_subfield(FieldSpec::tower_cyclo(3), 9)->str() == "layer:3.2");
    CHECK_THROWS_AS(unique_subfield(FieldSpec::layer(3, 1), 3), std::invalid_argument);
}

TEST_CASE("field spec parsing round-trip") {
    for (const char* s : {"Q", "K", "K5", "Zp:7", "cyclotower:3", "cyclo:2^5", "layer:5.1",
                          "subcyclo:7^2:21", "comp(layer:2.1,layer:3.2)"}) {
        CHECK(parse_field_spec(s).str() == s);
    }
    CHECK(parse_field_spec("K:d=10").str() == "comp(layer:2.1,layer:5.1)");
    CHECK_THROWS_AS(parse_field_spec("nonsense"), std::invalid_argument);
}

TEST_CASE("split conditions") {
    // 7^4 = 1 mod 25, consistent with <7> being the fixing subgroup
    CHECK(splits_completely(FieldSpec::layer(5, 1), 7));
    CHECK(pow_mod(7, 4, 25) == 1);
    CHECK(!splits_completely(FieldSpec::layer(5, 1), 3));
    // smallest split primes
    CHECK(find_split_primes(FieldSpec::cyclo(2, 5), 1, {})[0] == 97);
    CHECK(find_split_primes(FieldSpec::layer(3, 4), 1, {})[0] == 487);
    CHECK(find_split_primes(FieldSpec::layer(5, 1), 1, {}) == std::vector<std::uint64_t>{7});
    // every prime splits in Q
    CHECK(find_split_primes(FieldSpec::Q(), 3, {2, 3}) == std::vector<std::uint64_t>({5, 7, 11}));
    // next two 1 mod 32 primes after excluding 97
    auto more = find_split_primes(FieldSpec::cyclo(2, 5), 2, {97});
    CHECK(more == std::vector<std::uint64_t>({193, 257}));
    // search bound exceeded is an error, never silent truncation
    CHECK_THROWS_AS(find_split_primes(FieldSpec::cyclo(2, 5), 1, {}, 50), resource_exhausted);
    CHECK_THROWS_AS(splits_completely(FieldSpec::tower_K(), 7), std::domain_error);
}

TEST_CASE("split condition consistency with factorization patterns") {
    // for odd p: q splits completely in the layer iff Phi_{p^{n+1}} mod q has a
    // factor of degree dividing p-1 and the period minimal polynomial splits
    // into linear factors mod q
    for (std::uint64_t p : {3ull, 5ull}) {
        for (unsigned n : {1u, 2u}) {
            FieldSpec layer = FieldSpec::layer(p, n);
            const SubfieldPresentation& sp = field_presentation(layer);
            auto [c, h] = rp_to_int(sp.eta_minpoly);
            (void)c;
            auto [cp, phi] = rp_to_int(cyclotomic_poly(layer.conductor()));
            (void)cp;
            // q dividing disc(h) can repeat roots even when split; skip those
            Int hdisc = resultant_int(h, ip_derivative(h));
            for (std::uint64_t q = 5; q < 2000; q = next_prime_u64(q)) {
                if (q == p || int_mod(hdisc, q) == 0) continue;
                bool cond = splits_completely(layer, q);
                ModPoly hq = ip_to_mod(h, q);
                bool h_splits = hq.degree() == h.degree() &&
                                count_roots_mod_q(hq) == static_cast<unsigned>(h.degree());
                CHECK(cond == h_splits);
                if (cond) {
                    auto degs = factor_degrees_mod_q(ip_to_mod(phi, q));
                    bool has_small = false;
                    for (long d : degs)
                        if (static_cast<std::uint64_t>(p - 1) % d == 0) has_small = true;
                    CHECK(has_small);
                }
            }
        }
    }
}

TEST_CASE("presentations match field degrees") {
    for (const char* s : {"layer:2.2", "layer:3.2", "cyclo:2^4", "subcyclo:7^1:3",
                          "comp(layer:2.1,layer:3.1)"}) {
        FieldSpec f = parse_field_spec(s);
        const SubfieldPresentation& sp = field_presentation(f);
        CHECK(sp.degree == f.degree());
        CHECK(sp.eta_minpoly.degree() == static_cast<long>(f.degree()));
    }
}
