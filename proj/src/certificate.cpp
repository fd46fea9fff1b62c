#include "ttower/certificate.hpp"

#include <chrono>
#include <future>
#include <sstream>

#include "ttower/mod_factor.hpp"
#include "ttower/sha256.hpp"

namespace ttower {

using nlohmann::json;

PolyRecipe PolyRecipe::division(const Curve& E, long n, bool primitive) {
    if (n < 2) throw std::invalid_argument("PolyRecipe::division: n >= 2 required");
    PolyRecipe r;
    r.kind = Kind::DIVISION;
    r.curve = E;
    r.n = n;
    r.primitive = primitive;
    return r;
}

PolyRecipe PolyRecipe::explicit_poly(RationalPoly f, std::string name) {
    if (f.is_zero()) throw std::invalid_argument("PolyRecipe: zero polynomial");
    PolyRecipe r;
    r.kind = Kind::EXPLICIT;
    r.poly = std::move(f);
    r.name = std::move(name);
    return r;
}

long PolyRecipe::degree() const {
    if (kind == Kind::EXPLICIT) return poly.degree();
    ShortModel M = short_model(curve);
    // deg f_n = (n^2-1)/2 odd, (n^2-4)/2 even; root poly adds 3 for even n
    auto droot_deg = [](long n) { return n % 2 ? (n * n - 1) / 2 : (n * n - 4) / 2 + 3; };
    if (!primitive) return droot_deg(n);
    auto fac = factorize_u64(static_cast<std::uint64_t>(n));
    if (fac.size() != 1) throw std::domain_error("primitive recipe requires prime-power index");
    long ell = static_cast<long>(fac.begin()->first);
    return n == ell ? droot_deg(n) : droot_deg(n) - droot_deg(n / ell);
}

ModPoly PolyRecipe::eval_mod(std::uint64_t q) const {
    if (kind == Kind::EXPLICIT) return rp_to_mod(poly, q);
    ShortModel M = short_model(curve);
    return primitive ? primitive_division_poly_mod(M, n, q) : division_root_poly_mod(M, n, q);
}

std::set<std::uint64_t> PolyRecipe::excluded_primes() const {
    std::set<std::uint64_t> out;
    if (kind == Kind::EXPLICIT) {
        // primes dividing the leading coefficient or any denominator
        Int lead = poly.lc().get_num() * poly.lc().get_den();
        Int dens(1);
        for (const auto& c : poly.c) dens *= c.get_den();
        Int v = abs(lead * dens);
        for (std::uint64_t p = 2; p < 1000000 && v > 1; p = next_prime_u64(p))
            while (v % Int(static_cast<unsigned long>(p)) == 0) {
                out.insert(p);
                v /= Int(static_cast<unsigned long>(p));
            }
        return out;
    }
    // divisors of n, of the discriminant of the working model, and of the
    // leading coefficient (= n); the short model already carries 2 and 3
    for (auto& [p, e] : factorize_u64(static_cast<std::uint64_t>(n))) {
        (void)e;
        out.insert(p);
    }
    ShortModel M = short_model(curve);
    Int v = abs(M.disc);
    for (std::uint64_t p = 2; p < 1000000 && v > 1; p = next_prime_u64(p))
        while (v % Int(static_cast<unsigned long>(p)) == 0) {
            out.insert(p);
            v /= Int(static_cast<unsigned long>(p));
        }
    // any large unfactored cofactor of the discriminant is still screened by
    // direct divisibility in witness_allowed
    return out;
}

std::string PolyRecipe::describe() const {
    std::ostringstream os;
    if (kind == Kind::DIVISION) {
        os << "divpoly(" << (curve.label.empty() ? "curve" : curve.label) << ", n=" << n
           << (primitive ? ", exact-order" : "") << ")";
    } else {
        os << (name.empty() ? "poly" : name) << " deg " << poly.degree();
    }
    return os.str();
}

std::string PolyRecipe::fingerprint() const {
    std::ostringstream os;
    if (kind == Kind::DIVISION) {
        os << "div|" << curve.a1 << "|" << curve.a2 << "|" << curve.a3 << "|" << curve.a4 << "|"
           << curve.a6 << "|" << n << "|" << primitive;
    } else {
        os << "poly|" << poly.str();
    }
    return sha256_hex(os.str()).substr(0, 16);
}

namespace {

bool witness_allowed(const PolyRecipe& recipe, const FieldSpec& field, std::uint64_t q) {
    if (recipe.kind == PolyRecipe::Kind::DIVISION) {
        if (recipe.n % static_cast<long>(q) == 0) return false;
        ShortModel M = short_model(recipe.curve);
        if (q < 5 || int_mod(M.disc, q) == 0) return false;
    } else {
        if (rat_mod(recipe.poly.lc(), q) == 0) return false;
        for (const auto& c : recipe.poly.c)
            if (int_mod(c.get_den(), q) == 0) return false;
    }
    // ramified primes never split
    if (field.kind != FieldKind::Q && q == field.p) return false;
    return true;
}

std::string now_iso() {
    auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

} // namespace

json NoRootCertificate::to_json() const {
    json j;
    j["schema"] = schema;
    if (!curve_label.empty())
        j["curve_label"] = curve_label;
    else
        j["poly"] = poly;
    j["division_index"] = division_index;
    j["field_spec"] = field.str();
    j["excluded_primes"] = excluded_primes;
    j["witnesses"] = json::array();
    for (const auto& w : witnesses)
        j["witnesses"].push_back({{"q", w.q}, {"roots", w.roots}, {"millis", w.millis}});
    j["created"] = created;
    return j;
}

CertifyResult certify_no_root(const PolyRecipe& recipe, const FieldSpec& field,
                              const CertifyConfig& cfg) {
    if (field.is_tower()) throw std::invalid_argument("certify_no_root: finite field spec required");
    CertifyResult res;
    auto run_witness = [&](std::uint64_t w) {
        auto start = std::chrono::steady_clock::now();
        ModPoly f = recipe.eval_mod(w);
        WitnessRecord rec;
        rec.q = w;
        rec.roots = f.is_zero() ? ~0u : count_roots_mod_q(f);
        rec.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
        return rec;
    };
    std::vector<WitnessRecord> records; // root-free, the certificate payload
    std::vector<WitnessRecord> seen;    // everything examined, ascending
    std::uint64_t q = 1;
    unsigned scanned = 0;
    while (records.size() < cfg.min_witnesses && scanned < cfg.scan_budget) {
        // gather the next batch of eligible split primes
        std::vector<std::uint64_t> batch;
        unsigned want = std::min<unsigned>(cfg.min_witnesses - records.size(),
                                           cfg.scan_budget - scanned);
        while (batch.size() < want) {
            q = next_prime_u64(q);
            if (q > cfg.split_prime_cap) {
                if (!batch.empty()) break;
                res.status = CertifyStatus::INDETERMINATE;
                res.note = "witness search exhausted";
                res.seen = seen;
                return res;
            }
            if (!witness_allowed(recipe, field, q)) continue;
            if (!splits_completely(field, q)) continue;
            batch.push_back(q);
        }
        scanned += batch.size();
        std::vector<WitnessRecord> results(batch.size());
        if (cfg.parallel && batch.size() > 1) {
            std::vector<std::future<WitnessRecord>> futs;
            for (std::uint64_t w : batch)
                futs.push_back(std::async(std::launch::async, run_witness, w));
            for (std::size_t i = 0; i < futs.size(); ++i) results[i] = futs[i].get();
        } else {
            for (std::size_t i = 0; i < batch.size(); ++i) results[i] = run_witness(batch[i]);
        }
        for (const auto& r : results) {
            seen.push_back(r);
            if (r.roots == 0) records.push_back(r);
        }
    }
    // merged deterministically by q regardless of completion order
    std::sort(records.begin(), records.end(),
              [](const WitnessRecord& a, const WitnessRecord& b) { return a.q < b.q; });
    std::sort(seen.begin(), seen.end(),
              [](const WitnessRecord& a, const WitnessRecord& b) { return a.q < b.q; });
    res.seen = seen;
    if (records.size() < cfg.min_witnesses) {
        res.status = CertifyStatus::ROOT_LIKELY;
        unsigned with_roots = 0;
        std::uint64_t first_q = 0;
        for (const auto& r : seen)
            if (r.roots != 0) {
                ++with_roots;
                if (!first_q) first_q = r.q;
            }
        res.note = std::to_string(with_roots) + " of " + std::to_string(seen.size()) +
                   " split witnesses show roots (first at q = " + std::to_string(first_q) + ")";
        return res;
    }
    NoRootCertificate cert;
    cert.curve_label = recipe.kind == PolyRecipe::Kind::DIVISION ? recipe.curve.label : "";
    cert.poly = recipe.fingerprint() + ":" + std::to_string(recipe.degree()) + ":" + recipe.describe();
    cert.division_index = recipe.kind == PolyRecipe::Kind::DIVISION ? recipe.n : 0;
    cert.field = field;
    cert.excluded_primes = recipe.excluded_primes();
    cert.witnesses = records;
    cert.created = now_iso();
    res.status = CertifyStatus::CERTIFIED;
    res.cert = cert;
    return res;
}

RecheckResult recheck_certificate(const json& doc, const std::optional<Curve>& curve,
                                  const CertifyConfig& cfg) {
    (void)cfg;
    RecheckResult r;
    try {
        if (doc.at("schema").get<std::string>() != "norootcert/1") {
            r.detail = "unsupported schema";
            return r;
        }
        FieldSpec field = parse_field_spec(doc.at("field_spec").get<std::string>());
        long n = doc.at("division_index").get<long>();
        PolyRecipe recipe;
        if (doc.contains("curve_label")) {
            if (!curve) {
                r.detail = "curve record required for label " + doc["curve_label"].get<std::string>();
                return r;
            }
            recipe = PolyRecipe::division(*curve, n, true);
        } else {
            r.detail = "explicit-poly certificates carry only a fingerprint; cannot recheck without the polynomial";
            return r;
        }
        if (doc.at("witnesses").empty()) {
            r.detail = "no witnesses";
            return r;
        }
        for (const auto& w : doc.at("witnesses")) {
            std::uint64_t q = w.at("q").get<std::uint64_t>();
            if (!witness_allowed(recipe, field, q)) {
                r.detail = "witness " + std::to_string(q) + " is excluded";
                return r;
            }
            if (!splits_completely(field, q)) {
                r.detail = "witness " + std::to_string(q) + " does not split completely";
                return r;
            }
            unsigned expect = w.at("roots").get<unsigned>();
            unsigned got = count_roots_mod_q(recipe.eval_mod(q));
            if (got != expect || got != 0) {
                r.detail = "witness " + std::to_string(q) + ": recomputed " + std::to_string(got) +
                           " roots, recorded " + std::to_string(expect);
                return r;
            }
        }
        r.ok = true;
        r.detail = "all witnesses re-verified";
        return r;
    } catch (std::exception& e) {
        r.detail = std::string("recheck error: ") + e.what();
        return r;
    }
}

} // namespace ttower
