#ifndef TTOWER_LEMMAS_HPP
#define TTOWER_LEMMAS_HPP

#include <functional>

#include "ttower/curvedb.hpp"
#include "ttower/towers.hpp"

namespace ttower {

enum class LemmaVerdict { PASS, FAIL, INDETERMINATE };

struct LemmaOutcome {
    LemmaVerdict verdict = LemmaVerdict::INDETERMINATE;
    std::string detail;
    nlohmann::json artifacts; // evidence bundle persisted with the outcome
    long millis = 0;
};

struct LemmaContext {
    const CurveDB* db = nullptr;
    SearchConfig cfg;
};

struct LemmaCase {
    std::string id;
    std::string description;
    std::vector<std::string> required_curves;
    bool full_tier_only = false;
    std::function<LemmaOutcome(const LemmaContext&)> run;
};

const std::vector<LemmaCase>& lemma_registry();
const LemmaCase& lemma_by_id(const std::string& id);

struct VerifySummary {
    struct Entry {
        std::string id;
        LemmaVerdict verdict;
        std::string detail;
        long millis;
    };
    std::vector<Entry> entries;
    bool any_fail = false;
    bool any_indeterminate = false;
};

// run one lemma; missing curve records raise a configuration error listing
// the absent labels
LemmaOutcome verify_lemma(const std::string& id, const LemmaContext& ctx);

// run every registered lemma in the tier; when out_dir is nonempty, one
// evidence JSON per case is written there atomically
VerifySummary verify_all(const LemmaContext& ctx, bool full_tier, const std::string& out_dir,
                         unsigned jobs = 1);

// configuration errors (missing curves etc.), distinct from FAIL verdicts
struct configuration_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// normalize a report/certificate JSON for byte-comparison: strips timing
// fields (created, millis) recursively
nlohmann::json strip_timing(const nlohmann::json& j);

} // namespace ttower

#endif
