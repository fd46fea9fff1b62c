#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include <json.hpp>

#include "ttower/curvedb.hpp"
#include "ttower/tables.hpp"

using namespace ttower;

TEST_CASE("fixture loads and checksum is stable") {
    const KnowledgeTables& k = knowledge_tables();
    CHECK(k.sha256.size() == 64);
    const KnowledgeTables& again = knowledge_tables();
    CHECK(k.sha256 == again.sha256);
}

TEST_CASE("tampered fixture is rejected") {
    const char* env = std::getenv("TTOWER_FIXTURES");
    std::string base = env ? env : "fixtures";
    std::ifstream in(base + "/tables.json");
    nlohmann::json doc = nlohmann::json::parse(in);
    doc["tables"]["phi_table"]["7"] = 7; // corrupt one value
    std::string tmp = "/tmp/ttower_tampered_tables.json";
    {
        std::ofstream out(tmp);
        out << doc.dump();
    }
    CHECK_THROWS_WITH_AS(knowledge_tables_at(tmp), doctest::Contains("checksum"), std::runtime_error);
}

TEST_CASE("isogeny degrees and admissible orders") {
    CHECK(isogeny_degree_allowed(21));
    CHECK(!isogeny_degree_allowed(23));
    CHECK(isogeny_degree_allowed(1));
    CHECK(admissible_prime_power_order(32));
    CHECK(!admissible_prime_power_order(49));
    CHECK(admissible_prime_power_order(27));
    // internal consistency: for every admissible prime power, the divisor
    // chain m, m/ell, ... stays inside the isogeny list, allowing one step of
    // slack at the top (an order-q^n point forces a rational q^{n-1}-isogeny)
    for (long m : knowledge_tables().admissible_prime_power_orders) {
        auto fac = factorize_u64(static_cast<std::uint64_t>(m));
        REQUIRE(fac.size() == 1);
        long ell = static_cast<long>(fac.begin()->first);
        CHECK((isogeny_degree_allowed(m) || isogeny_degree_allowed(m / ell)));
        for (long d = m / ell; d > 1; d /= ell) CHECK(isogeny_degree_allowed(d));
    }
}

TEST_CASE("point degree options") {
    auto r11 = point_degree_options(11);
    CHECK(r11.tabulated);
    CHECK(r11.proven == std::set<long>({5, 10, 20, 40, 55, 80, 100, 110, 120}));
    auto r2 = point_degree_options(2);
    CHECK(r2.proven == std::set<long>({1, 2, 3}));
    auto r13 = point_degree_options(13);
    CHECK(r13.proven.count(3));
    CHECK(r13.proven.count(4));
    // parametric rows: 17 and the CM primes
    auto r17 = point_degree_options(17);
    CHECK(!r17.tabulated);
    CHECK(r17.proven.count(8));
    CHECK(r17.proven.count(288));
    auto r19 = point_degree_options(19);
    CHECK(r19.proven.count(9));
    CHECK(r19.proven.count(171));
    // p = 8 (mod 9): the caveat degrees are flagged MAYBE and kept separate
    auto r53 = point_degree_options(53);
    CHECK(r53.maybe.count((53 * 53 - 1) / 3));
    CHECK(!r53.proven.count((53 * 53 - 1) / 3));
}

TEST_CASE("layer bounds") {
    CHECK(layer_bound(27, 3) == 2);
    CHECK(layer_bound(5, 2) == 2);
    CHECK(layer_bound(163, 3) == 4);
    // phi_table agrees with a direct computation
    for (auto& [n, phi] : knowledge_tables().phi_table)
        CHECK(static_cast<std::uint64_t>(phi) == euler_phi_u64(static_cast<std::uint64_t>(n)));
}

TEST_CASE("degree step bounds") {
    CHECK(degree_step_bound(2, DegreeStepContext::P_EQUALS_2) == std::set<long>({1, 2, 4}));
    auto g5 = degree_step_bound(5, DegreeStepContext::GENERIC);
    CHECK(g5.count(25));
    CHECK(g5.count(20));
    CHECK(g5.count(4));
    CHECK(!g5.count(8));
    CHECK(degree_step_bound(3, DegreeStepContext::GALOIS_OVER_BASE) == std::set<long>({1, 3, 9}));
}

TEST_CASE("full torsion filters") {
    CHECK(full_torsion_allowed_in_abelian(8));
    CHECK(!full_torsion_allowed_in_abelian(7));
    CHECK(full_torsion_allowed_over_K(2));
    CHECK(!full_torsion_allowed_over_K(3));
}

TEST_CASE("Table 1 cross-validation against loaded curves") {
    CurveDB db = load_default_curvedb();
    const auto& k = knowledge_tables();
    for (const auto& [p, rows] : k.cm_isogeny_rows) {
        (void)p;
        for (const auto& row : rows) {
            auto E = db.find(row.label);
            REQUIRE_MESSAGE(E.has_value(), row.label);
            CHECK(E->j == row.j);
        }
    }
    CHECK(k.cm_thirteen_j.size() == 13);
    CHECK(k.cm_thirteen_j[0].get_str() == "-262537412640768000");
    CHECK(k.seventeen_isogeny_j.size() == 2);
    CHECK(k.seventeen_isogeny_j[0] == Rat(-297756989, 2));
}
