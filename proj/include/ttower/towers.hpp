#ifndef TTOWER_TOWERS_HPP
#define TTOWER_TOWERS_HPP

#include <json.hpp>

#include "ttower/torsion_field.hpp"

namespace ttower {

// resolution of one candidate prime-power order over a tower
struct OrderResolution {
    long m = 0;
    Verdict verdict = Verdict::INDETERMINATE;
    std::optional<FieldSpec> search_field; // empty when filtered before any search
    std::string note;                      // filter provenance / details
    std::optional<NoRootCertificate> cert;
    RationalPoly x_minpoly; // witness payload
    bool y_obstructed = false;
    long millis = 0;
};

struct TorsionReport {
    std::string curve_label;
    FieldSpec field; // tower or finite
    TorsionStructure group;
    std::vector<OrderResolution> evidence;
    long total_millis = 0;
    bool indeterminate = false;

    nlohmann::json to_json() const; // schema "report/1"
};

// candidate orders with their finite search fields for a given tower; pure
// table arithmetic, independent of the curve
struct CandidatePlan {
    long m = 0;
    std::optional<FieldSpec> field; // nullopt: ruled out by the degree filters
    std::string note;
};
std::vector<CandidatePlan> plan_tower_candidates(const FieldSpec& tower);

// torsion of E over an infinite tower, assembled from finite searches with
// per-order evidence; INDETERMINATE propagates to the report, never silently
TorsionReport torsion_over_tower(const Curve& E, const FieldSpec& tower,
                                 const SearchConfig& cfg = {});

// torsion over a finite field spec as a report (same evidence shape)
TorsionReport torsion_over_field_report(const Curve& E, const FieldSpec& field,
                                        const SearchConfig& cfg = {});

// least k with E(Q(zeta_{p^k}))_tors equal to the full-tower torsion; the
// per-level groups are returned through `levels` when non-null
long stabilization_level(const Curve& E, std::uint64_t p, const SearchConfig& cfg = {},
                         std::vector<TorsionStructure>* levels = nullptr,
                         TorsionStructure* tower_group = nullptr);

// Theorem-shaped checks used by the verifier
bool in_K_torsion_list(const TorsionStructure& t); // cyclic n <= 10 or {12,13,21,27}; Z/2+Z/2n, n <= 4
long stabilization_bound(std::uint64_t p);         // 1 for p >= 5, 3 for p = 3, 4 for p = 2

} // namespace ttower

#endif
