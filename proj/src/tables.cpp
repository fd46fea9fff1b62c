#include "ttower/tables.hpp"

#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "ttower/sha256.hpp"

namespace ttower {

using nlohmann::json;

namespace {

Rat rat_from_json(const json& v) {
    if (v.is_number_integer()) return Rat(static_cast<long>(v.get<long long>()));
    if (v.is_string()) {
        Rat r;
        if (mpq_set_str(r.get_mpq_t(), v.get<std::string>().c_str(), 10) != 0)
            throw std::invalid_argument("bad rational literal: " + v.get<std::string>());
        r.canonicalize();
        return r;
    }
    throw std::invalid_argument("rational expected as integer or string");
}

KnowledgeTables parse_tables(const json& doc) {
    if (doc.at("schema").get<std::string>() != "tables/1")
        throw std::runtime_error("tables fixture: unsupported schema");
    const json& t = doc.at("tables");
    std::string digest = sha256_hex(t.dump());
    if (digest != doc.at("sha256").get<std::string>())
        throw std::runtime_error("tables fixture: checksum mismatch (file tampered or corrupted)");
    KnowledgeTables k;
    k.sha256 = digest;
    for (const auto& v : t.at("mazur_isogeny_degrees")) k.mazur_isogeny_degrees.insert(v.get<long>());
    for (const auto& v : t.at("admissible_prime_power_orders"))
        k.admissible_prime_power_orders.insert(v.get<long>());
    for (const auto& [key, row] : t.at("degree_table").items()) {
        std::set<long>& s = k.degree_table[std::stol(key)];
        for (const auto& v : row) s.insert(v.get<long>());
    }
    for (const auto& [key, v] : t.at("phi_table").items()) k.phi_table[std::stol(key)] = v.get<long>();
    for (const auto& [key, rows] : t.at("cm_isogeny_rows").items()) {
        auto& vec = k.cm_isogeny_rows[std::stol(key)];
        for (const auto& r : rows)
            vec.push_back({rat_from_json(r.at("j")), r.at("label").get<std::string>()});
    }
    for (const auto& v : t.at("cm_thirteen_j")) k.cm_thirteen_j.push_back(rat_from_json(v));
    for (const auto& [key, shapes] : t.at("abelian_full_torsion").items()) {
        auto& vec = k.abelian_full_torsion[std::stol(key)];
        for (const auto& s : shapes) vec.push_back(s.get<std::string>());
    }
    for (const auto& v : t.at("seventeen_isogeny_j")) k.seventeen_isogeny_j.push_back(rat_from_json(v));
    return k;
}

std::string default_fixture_path() {
    const char* env = std::getenv("TTOWER_FIXTURES");
    if (env) return std::string(env) + "/tables.json";
    return "fixtures/tables.json";
}

} // namespace

const KnowledgeTables& knowledge_tables_at(const std::string& path) {
    static std::map<std::string, KnowledgeTables> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(path);
    if (it != cache.end()) return it->second;
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open tables fixture: " + path);
    json doc = json::parse(in);
    return cache.emplace(path, parse_tables(doc)).first->second;
}

const KnowledgeTables& knowledge_tables() { return knowledge_tables_at(default_fixture_path()); }

bool isogeny_degree_allowed(long n) {
    if (n < 1) throw std::invalid_argument("isogeny_degree_allowed: n >= 1 required");
    if (n == 1) return true;
    return knowledge_tables().mazur_isogeny_degrees.count(n) > 0;
}

bool admissible_prime_power_order(long m) {
    if (m < 2) throw std::invalid_argument("admissible_prime_power_order: m >= 2 required");
    return knowledge_tables().admissible_prime_power_orders.count(m) > 0;
}

DegreeOptions point_degree_options(long p) {
    const auto& k = knowledge_tables();
    DegreeOptions opt;
    auto it = k.degree_table.find(p);
    if (it != k.degree_table.end()) {
        opt.proven = it->second;
        opt.tabulated = true;
        return opt;
    }
    // parametric families (proven): p^2 - 1 for all p; special rows for 17 and
    // the rational-CM primes; plus the congruence families
    opt.proven.insert(p * p - 1);
    if (p == 17) {
        for (long d : {8L, 16L, 32L, 136L, 256L, 272L, 288L}) opt.proven.insert(d);
    }
    if (p == 19 || p == 43 || p == 67 || p == 163) {
        opt.proven.insert((p - 1) / 2);
        opt.proven.insert(p - 1);
        opt.proven.insert(p * (p - 1) / 2);
        opt.proven.insert(p * (p - 1));
    }
    if (p % 3 == 1) {
        opt.proven.insert(2 * (p - 1));
        opt.proven.insert((p - 1) * (p - 1));
    }
    if (p % 9 == 4 || p % 9 == 7) {
        opt.proven.insert((p - 1) * (p - 1) / 3);
        opt.proven.insert(2 * (p - 1) * (p - 1) / 3);
    }
    if (p % 9 == 2 || p % 9 == 5) {
        opt.proven.insert((p * p - 1) / 3);
        opt.proven.insert(2 * (p * p - 1) / 3);
    }
    if (p % 9 == 8) {
        opt.maybe.insert((p * p - 1) / 3);
        opt.maybe.insert(2 * (p * p - 1) / 3);
    }
    return opt;
}

long layer_bound(long n, long p) {
    if (n < 2) throw std::invalid_argument("layer_bound: n >= 2 required");
    const auto& k = knowledge_tables();
    long phi;
    auto it = k.phi_table.find(n);
    if (it != k.phi_table.end())
        phi = it->second;
    else
        phi = static_cast<long>(euler_phi_u64(static_cast<std::uint64_t>(n)));
    return static_cast<long>(valuation_u64(static_cast<std::uint64_t>(phi),
                                           static_cast<std::uint64_t>(p)));
}

std::set<long> degree_step_bound(long p, DegreeStepContext ctx) {
    auto divisors_of = [](long v) {
        std::set<long> s;
        for (auto d : divisors_u64(static_cast<std::uint64_t>(v))) s.insert(static_cast<long>(d));
        return s;
    };
    switch (ctx) {
        case DegreeStepContext::GALOIS_OVER_BASE:
            return divisors_of(p * p);
        case DegreeStepContext::P_EQUALS_2:
            if (p != 2) throw std::invalid_argument("degree_step_bound: context requires p = 2");
            return divisors_of(4);
        case DegreeStepContext::GENERIC: {
            std::set<long> s = divisors_of(p * p);
            for (long d : divisors_of((p - 1) * p)) s.insert(d);
            return s;
        }
    }
    throw std::logic_error("unreachable");
}

bool full_torsion_allowed_in_abelian(long n) {
    if (n < 2) throw std::invalid_argument("full_torsion_allowed_in_abelian: n >= 2 required");
    return knowledge_tables().abelian_full_torsion.count(n) > 0;
}

bool full_torsion_allowed_over_K(long n) {
    if (n < 2) throw std::invalid_argument("full_torsion_allowed_over_K: n >= 2 required");
    // K is totally real, so zeta_n with n > 2 never embeds
    return n == 2;
}

} // namespace ttower
