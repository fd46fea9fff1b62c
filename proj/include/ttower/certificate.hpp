#ifndef TTOWER_CERTIFICATE_HPP
#define TTOWER_CERTIFICATE_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "ttower/curve.hpp"
#include "ttower/division_poly.hpp"
#include "ttower/field_spec.hpp"
#include "ttower/split.hpp"

namespace ttower {

// construction recipe for the polynomial a certificate talks about; division
// polynomials are evaluated directly mod q and never materialized over Q
struct PolyRecipe {
    enum class Kind { DIVISION, EXPLICIT };
    Kind kind = Kind::EXPLICIT;
    // DIVISION: the short model of the curve plus the division index
    Curve curve;
    long n = 0;
    bool primitive = true; // exact-order polynomial for prime-power n
    // EXPLICIT
    RationalPoly poly;

    static PolyRecipe division(const Curve& E, long n, bool primitive = true);
    static PolyRecipe explicit_poly(RationalPoly f, std::string name = "");
    std::string name; // for EXPLICIT reporting

    long degree() const;
    ModPoly eval_mod(std::uint64_t q) const;
    std::set<std::uint64_t> excluded_primes() const;
    std::string fingerprint() const; // sha256 over a canonical description
    std::string describe() const;
};

struct WitnessRecord {
    std::uint64_t q = 0;
    unsigned roots = 0;
    long millis = 0;
};

struct NoRootCertificate {
    std::string schema = "norootcert/1";
    std::string curve_label;    // empty for explicit polynomials
    std::string poly;           // fingerprint + degree + recipe description
    long division_index = 0;    // 0 for explicit polynomials
    FieldSpec field;
    std::set<std::uint64_t> excluded_primes;
    std::vector<WitnessRecord> witnesses; // sorted by q, all with roots = 0
    std::string created;        // ISO timestamp (timing field)

    nlohmann::json to_json() const;
};

enum class CertifyStatus { CERTIFIED, ROOT_LIKELY, INDETERMINATE };

struct CertifyResult {
    CertifyStatus status = CertifyStatus::INDETERMINATE;
    std::optional<NoRootCertificate> cert;
    std::vector<WitnessRecord> seen; // includes any witnesses that saw roots
    std::string note;
};

struct CertifyConfig {
    unsigned min_witnesses = 3;
    unsigned scan_budget = 40; // candidate split primes examined before giving up
    std::uint64_t split_prime_cap = 10'000'000;
    bool parallel = true;
};

// soundness: a root in the field reduces to a root mod q at every completely
// split good witness, so root count 0 at one witness proves there is none.
// Eligible split primes are scanned in ascending order and the first
// min_witnesses root-free ones form the certificate; if the scan budget is
// exhausted with roots showing at every remaining candidate, the result is
// ROOT_LIKELY (with the observed list) and the caller escalates to exact
// arithmetic.
CertifyResult certify_no_root(const PolyRecipe& recipe, const FieldSpec& field,
                              const CertifyConfig& cfg = {});

// re-verify a persisted certificate from its JSON alone (plus the curve
// record for division recipes); recomputes every witness root count
struct RecheckResult {
    bool ok = false;
    std::string detail;
};
RecheckResult recheck_certificate(const nlohmann::json& doc,
                                  const std::optional<Curve>& curve,
                                  const CertifyConfig& cfg = {});

} // namespace ttower

#endif
