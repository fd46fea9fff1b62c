#ifndef TTOWER_TORSION_FIELD_HPP
#define TTOWER_TORSION_FIELD_HPP

#include <chrono>
#include <optional>

#include "ttower/certificate.hpp"
#include "ttower/number_field.hpp"
#include "ttower/torsion_q.hpp"

namespace ttower {

enum class Verdict { WITNESS, CERTIFIED_ABSENT, FILTERED_ABSENT, INDETERMINATE };

// outcome of the order-m point search over a finite field spec
struct PointSearch {
    Verdict verdict = Verdict::INDETERMINATE;
    long m = 0;
    FieldSpec field;
    // WITNESS payload
    RationalPoly x_minpoly;  // minimal polynomial of the witness x over Q
    std::string x_rep;       // x as a polynomial in the field generator
    std::string y_rep;       // y likewise (empty when
                             // y lives only in a quadratic extension)
    bool y_obstructed = false; // x found in field, y not (counts as absent)
    // CERTIFIED_ABSENT payload
    std::optional<NoRootCertificate> cert;
    std::string note;
    long millis = 0;
};

struct SearchConfig {
    CertifyConfig certify;
    FactorConfig factor;
    long exact_degree_budget = 2000; // cap on norms handed to the factorizer
    std::uint64_t budget_ms = 0;     // per-case soft cap, 0 = unlimited

    // a fresh deadline for one verification case
    std::chrono::steady_clock::time_point case_start = std::chrono::steady_clock::now();
    void restart_budget() { case_start = std::chrono::steady_clock::now(); }
    bool over_budget() const {
        if (budget_ms == 0) return false;
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - case_start)
                   .count() > static_cast<long>(budget_ms);
    }
};

// decide whether E has a point of exact order m (prime power) with
// coordinates in the finite field F: certificates first, exact arithmetic on
// ROOT_LIKELY. A WITNESS carries exact coordinates verified in the field; an
// absence verdict carries a certificate or an exhaustive exact root analysis.
PointSearch torsion_point_over_field(const Curve& E, long m, const FieldSpec& F,
                                     const SearchConfig& cfg = {});

// number of 2-torsion points of E rational over F (0, 1, or 3)
unsigned two_torsion_roots_in_field(const Curve& E, const FieldSpec& F, const SearchConfig& cfg = {});

// is E[m] entirely rational over F? (tested for m = 2 and m = 4; used to pin
// the left factor of Z/a + Z/b group shapes)
bool full_level_in_field(const Curve& E, long m, const FieldSpec& F, const SearchConfig& cfg = {});

// exact torsion structure over a finite field spec, with per-order evidence
struct FiniteTorsionResult {
    TorsionStructure group;
    std::vector<PointSearch> evidence;
};
FiniteTorsionResult torsion_over_finite_field(const Curve& E, const FieldSpec& F,
                                              const SearchConfig& cfg = {});

} // namespace ttower

#endif
