#ifndef TTOWER_TABLES_HPP
#define TTOWER_TABLES_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ttower/int_util.hpp"

namespace ttower {

// executable encodings of the classification tables; loaded from a reviewed,
// checksummed fixture file so the numbers can be diffed against their source
struct KnowledgeTables {
    std::set<long> mazur_isogeny_degrees;
    std::set<long> admissible_prime_power_orders;
    // fully tabulated degree rows, per prime
    std::map<long, std::set<long>> degree_table;
    // parametric degree families for the other primes: evaluated on demand
    std::map<long, long> phi_table;
    struct CMRow {
        Rat j;
        std::string label;
    };
    std::map<long, std::vector<CMRow>> cm_isogeny_rows;
    std::vector<Rat> cm_thirteen_j;
    std::map<long, std::vector<std::string>> abelian_full_torsion; // n -> Galois-group shapes
    std::vector<Rat> seventeen_isogeny_j;

    std::string sha256; // checksum of the canonicalized table payload
};

// load + verify checksum; throws on tampering or missing file
const KnowledgeTables& knowledge_tables();
// explicit path override (tests); default resolves $TTOWER_FIXTURES/tables.json
const KnowledgeTables& knowledge_tables_at(const std::string& path);

bool isogeny_degree_allowed(long n);
bool admissible_prime_power_order(long m);

// degree options for [Q(P):Q], P of prime order p. For tabulated p the exact
// row; for other p the proven parametric families (items 1-3 of the source
// table); the p = 8 (mod 9) "might be possible" degrees are reported
// separately and no verifier logic may rely on their absence.
struct DegreeOptions {
    std::set<long> proven;
    std::set<long> maybe;
    bool tabulated = false;
};
DegreeOptions point_degree_options(long p);

// v_p(phi(n)): the layer index bound for Q(P) inside Q_{infinity,p}
long layer_bound(long n, long p);

enum class DegreeStepContext { GENERIC, GALOIS_OVER_BASE, P_EQUALS_2 };
std::set<long> degree_step_bound(long p, DegreeStepContext ctx);

// full n-torsion over an abelian extension of Q
bool full_torsion_allowed_in_abelian(long n);
// full n-torsion over the totally real compositum K
bool full_torsion_allowed_over_K(long n);

} // namespace ttower

#endif
