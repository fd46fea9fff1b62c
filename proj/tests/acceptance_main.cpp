// acceptance suite: one line per criterion, exit 0 iff all pass
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "oracles.hpp"
#include "ttower/division_poly.hpp"
#include "ttower/mod_factor.hpp"
#include "ttower/galois_index.hpp"
#include "ttower/lemmas.hpp"
#include "ttower/tables.hpp"

using namespace ttower;
using nlohmann::json;

namespace {

int failures = 0;

struct Criterion {
    std::string name;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;

    explicit Criterion(std::string n) : name(std::move(n)) {}
    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
    // contain resource-cap throws and report them as criterion failures
    template <class Fn>
    void guarded(Fn&& fn) {
        try {
            fn();
        } catch (std::exception& e) {
            expect(false, std::string("exception: ") + e.what());
        }
    }

    long finish(long budget_ms = 0) {
        long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        if (budget_ms > 0 && ms > budget_ms) {
            ok = false;
            detail += (detail.empty() ? "" : "; ") + std::string("runtime ") + std::to_string(ms) +
                      " ms exceeds budget " + std::to_string(budget_ms) + " ms";
        }
        std::printf("%-4s %-52s (%ld ms)%s%s\n", ok ? "PASS" : "FAIL", name.c_str(), ms,
                    detail.empty() ? "" : "  -- ", detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
        return ms;
    }
};

std::vector<long> capped_factor_degrees(const Curve& E, long p, const SearchConfig& cfg) {
    ShortModel M = short_model(E);
    IntPoly psi = division_poly_x(M, p);
    auto fac = factor_over_Q(ip_to_rat(psi), p - 1, cfg.factor);
    std::vector<long> degs;
    for (auto& [g, e] : fac.factors)
        for (unsigned i = 0; i < e; ++i)
            if (g.degree() <= p - 1) degs.push_back(g.degree());
    std::sort(degs.begin(), degs.end());
    return degs;
}

std::string run_cli(const std::string& args, int* rc_out) {
    const char* b = std::getenv("TTOWER_BIN");
    if (!b) {
        if (rc_out) *rc_out = -1;
        return "";
    }
    std::string cmd = std::string(b) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    std::string out;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
    int rc = pclose(pipe);
    if (rc_out) *rc_out = WEXITSTATUS(rc);
    return out;
}

} // namespace

int main() {
    CurveDB db = load_default_curvedb();
    SearchConfig cfg;
    LemmaContext ctx{&db, cfg};

    // 1. Table 2, p = 11: one irreducible factor of degree <= 10, of degree 5
    {
        Criterion c("1. Table 2 reproduction, p = 11 (121a1/b1/c1)");
        c.guarded([&] {
        for (const char* label : {"121a1", "121b1", "121c1"}) {
            const Curve& E = db.by_label(label);
            ShortModel M = short_model(E);
            c.expect(division_poly_x(M, 11).degree() == 60, std::string(label) + ": deg psi_11 != 60");
            auto degs = capped_factor_degrees(E, 11, cfg);
            c.expect(degs == std::vector<long>{5},
                     std::string(label) + ": factors below 11 are not exactly {5}");
        }
        });
        c.finish(30000);
    }

    // 2. Table 2, p = 19 and p = 37
    {
        Criterion c("2. Table 2 reproduction, p = 19 and p = 37");
        c.guarded([&] {
        const Curve& e361 = db.by_label("361a1");
        c.expect(division_poly_x(short_model(e361), 19).degree() == 180, "deg psi_19 != 180");
        c.expect(capped_factor_degrees(e361, 19, cfg) == std::vector<long>{9},
                 "361a1: factors below 19 are not exactly {9}");
        const Curve& h1 = db.by_label("1225h1");
        c.expect(division_poly_x(short_model(h1), 37).degree() == 684, "deg psi_37 != 684");
        c.expect(capped_factor_degrees(h1, 37, cfg) == std::vector<long>({6, 6, 6}),
                 "1225h1: factors below 37 are not exactly {6,6,6}");
        const Curve& h2 = db.by_label("1225h2");
        c.expect(capped_factor_degrees(h2, 37, cfg) == std::vector<long>{18},
                 "1225h2: factors below 37 are not exactly {18}");
        });
        c.finish(600000);
    }

    // 3. no-root certificates for every Table 1 row over the subfields of K
    {
        Criterion c("3. Table 1 certificates over subfields of K (incl. 163)");
        c.guarded([&] {
        const auto& tables = knowledge_tables();
        for (const auto& [p, rows] : tables.cm_isogeny_rows) {
            for (const auto& row : rows) {
                const Curve& E = db.by_label(row.label);
                PolyRecipe recipe = PolyRecipe::division(E, p, true);
                for (std::uint64_t d : divisors_u64(static_cast<std::uint64_t>(p - 1))) {
                    auto field = unique_subfield(FieldSpec::tower_K(), d);
                    CertifyResult cr = certify_no_root(recipe, *field, cfg.certify);
                    c.expect(cr.status == CertifyStatus::CERTIFIED,
                             row.label + " deg " + std::to_string(d) + ": " + cr.note);
                    if (cr.cert) {
                        c.expect(cr.cert->witnesses.size() >= 3, "fewer than 3 witnesses");
                        for (const auto& w : cr.cert->witnesses)
                            c.expect(w.roots == 0 && splits_completely(*field, w.q),
                                     "bad witness " + std::to_string(w.q));
                    }
                }
            }
        }
        });
        c.finish(300000);
    }

    // 4. positive witness: 20736c1/20736d1 trivial over Q, Z/13 over K
    {
        Criterion c("4. order-13 witness for 20736c1 and 20736d1 over K");
        c.guarded([&] {
        for (const char* label : {"20736c1", "20736d1"}) {
            const Curve& E = db.by_label(label);
            c.expect(torsion_over_Q(E).group.order() == 1, std::string(label) + ": E(Q) not trivial");
            TorsionReport rep = torsion_over_tower(E, FieldSpec::tower_K(), cfg);
            c.expect(!rep.indeterminate, std::string(label) + ": INDETERMINATE");
            c.expect(rep.group == TorsionStructure{1, 13},
                     std::string(label) + ": E(K) = " + rep.group.str());
            bool witness = false, y_ok = false;
            for (const auto& ev : rep.evidence)
                if (ev.m == 13 && ev.verdict == Verdict::WITNESS) {
                    witness = true;
                    y_ok = !ev.y_obstructed;
                    c.expect(ev.x_minpoly.degree() >= 1 && 12 % ev.x_minpoly.degree() == 0,
                             "witness x degree does not divide 12");
                }
            c.expect(witness && y_ok, std::string(label) + ": no order-13 witness with y in the field");
        }
        });
        c.finish(0);
    }

    // 5. stabilization remarks
    {
        Criterion c("5. stabilization: 27a4 at level 3, 32a4 at level 4");
        c.guarded([&] {
        std::vector<TorsionStructure> levels3, levels2;
        TorsionStructure tg3, tg2;
        long k3 = stabilization_level(db.by_label("27a4"), 3, cfg, &levels3, &tg3);
        c.expect(k3 == 3, "27a4 level " + std::to_string(k3));
        c.expect(levels3.size() >= 3 && levels3[1] == TorsionStructure{1, 9} &&
                     levels3[2] == TorsionStructure{1, 27},
                 "27a4 level groups wrong");
        long k2 = stabilization_level(db.by_label("32a4"), 2, cfg, &levels2, &tg2);
        c.expect(k2 == 4, "32a4 level " + std::to_string(k2));
        c.expect(levels2.size() >= 4 && levels2[2] == TorsionStructure{2, 4} &&
                     levels2[3] == TorsionStructure{2, 8},
                 "32a4 level groups wrong");
        });
        c.finish(0);
    }

    // 6. index arithmetic with enumeration cross-check
    {
        Criterion c("6. Greenberg index 150 and |GL2(Z/25)| = 300000");
        c.guarded([&] {
        GreenbergIndexResult r = greenberg_index_check(order25_bound_group());
        c.expect(r.index == 150 && r.divisible_by_25, "index != 150");
        c.expect(gl2_order(5, 2) == 300000, "gl2 order wrong");
        c.expect(gl2_order_by_enumeration(25) == 300000, "enumeration cross-check failed");
        });
        c.finish(0);
    }

    // 7. subfield lattice
    {
        Criterion c("7. unique-subfield lattice of the towers");
        c.guarded([&] {
        c.expect(!unique_subfield(FieldSpec::tower_cyclo(11), 33).has_value(),
                 "Q(zeta_11^inf) shows a degree-33 subfield");
        for (std::uint64_t d = 1; d <= 50; ++d) {
            auto sub = unique_subfield(FieldSpec::tower_K(), d);
            c.expect(sub.has_value() && sub->degree() == d,
                     "K subfield of degree " + std::to_string(d));
        }
        c.expect(!unique_subfield(FieldSpec::tower_K5(), 6).has_value(), "K5 degree 6 should be NONE");
        });
        c.finish(0);
    }

    // 8. CM psi_8 sweep and the 17-isogeny pair. The psi_8 certificate for
    // j = 287496 is provably unobtainable: that CM class contains 32a4, which
    // reaches Z/2+Z/8 over Q(zeta_16), so exact-order-8 x-coordinates lie in
    // the field for every curve with that j (x-roots are twist-invariant).
    // The criterion is reported as stated — an honest FAIL carrying the
    // verified refutation — and the lemma's actual conclusion (no point of
    // exact order 16 over Q(zeta_64)) is checked alongside; see the ledger.
    {
        Criterion c("8. CM psi_8 over Q(zeta_64); psi_17 over Q(zeta_32)");
        c.guarded([&] {
        const auto& tables = knowledge_tables();
        c.expect(tables.cm_thirteen_j.size() == 13, "CM list size");
        c.expect(tables.cm_thirteen_j.front().get_str() == "-262537412640768000", "CM list head");
        for (const Rat& j : tables.cm_thirteen_j) {
            Curve E = curve_from_j(j);
            CertifyResult cr =
                certify_no_root(PolyRecipe::division(E, 8, true), FieldSpec::cyclo(2, 6), cfg.certify);
            if (cr.status != CertifyStatus::CERTIFIED) {
                // verify the refutation exactly before reporting it
                ShortModel M = short_model(E);
                NumberField NF = field_presentation(FieldSpec::cyclo(2, 4)).as_number_field();
                auto xs = nf_roots_of(NF, ip_to_rat(primitive_division_poly(M, 8)), cfg.factor, 1);
                if (!xs.empty()) {
                    c.expect(false, "criterion as stated is refuted for j = " + j.get_str() +
                                        ": exact order-8 x verified in Q(zeta_16), x minpoly " +
                                        nf_minimal_polynomial(NF, xs[0]).str());
                } else {
                    c.expect(false, "j = " + j.get_str() + ": " + cr.note);
                }
            }
            // the conclusion the source lemma needs: no exact order-16 point
            PointSearch ps = torsion_point_over_field(E, 16, FieldSpec::cyclo(2, 6), cfg);
            c.expect(ps.verdict != Verdict::WITNESS && ps.verdict != Verdict::INDETERMINATE,
                     "order-16 check failed for j = " + j.get_str());
        }
        for (const Rat& j : tables.seventeen_isogeny_j) {
            Curve E = curve_from_j(j);
            CertifyResult cr =
                certify_no_root(PolyRecipe::division(E, 17, true), FieldSpec::cyclo(2, 5), cfg.certify);
            c.expect(cr.status == CertifyStatus::CERTIFIED, "j = " + j.get_str() + ": " + cr.note);
        }
        });
        c.finish(60000);
    }

    // 9. oracle equivalence: division polynomials vs brute force; torsion vs Lutz-Nagell
    {
        Criterion c("9. oracle equivalence (divpoly roots, Lutz-Nagell)");
        c.guarded([&] {
        std::vector<Curve> fixtures;
        for (const auto& label : db.labels()) {
            const Curve& E = db.by_label(label);
            // keep the brute-force enumerations affordable
            if (abs(E.disc.get_num()) < 100000000) fixtures.push_back(E);
        }
        std::mt19937_64 rng(1);
        unsigned mismatches = 0;
        for (const Curve& E : fixtures) {
            ShortModel M = short_model(E);
            for (long n : {3L, 5L, 7L, 9L, 11L, 13L}) {
                unsigned tried = 0;
                while (tried < 5) {
                    std::uint64_t q = 11 + 2 * (rng() % 95);
                    if (!is_prime_u64(q) || !good_reduction(E, q) || int_mod(M.disc, q) == 0) continue;
                    if (n % static_cast<long>(q) == 0) continue;
                    ++tried;
                    auto brute = oracles::brute_order_x_mod_q(E, n, q);
                    ModPoly prim = primitive_division_poly_mod(M, n, q);
                    std::set<std::uint64_t> roots;
                    std::uint64_t sx = rat_mod(M.sx, q), tx = rat_mod(M.tx, q);
                    for (std::uint64_t X : roots_mod_q(prim))
                        roots.insert(mul_mod(sub_mod(X, tx, q), inv_mod(sx, q), q));
                    for (std::uint64_t x : brute)
                        if (!roots.count(x)) ++mismatches;
                }
            }
        }
        c.expect(mismatches == 0, "divpoly/brute-force mismatches: " + std::to_string(mismatches));

        // torsion_over_Q vs Lutz-Nagell across all Mazur groups
        struct TF { Curve E; TorsionStructure want; };
        std::vector<TF> tf = {
            {make_curve(Rat(0), Rat(0), Rat(1), Rat(-1), Rat(0), "a"), {1, 1}},
            {make_curve(Rat(1), Rat(-1), Rat(0), Rat(-2), Rat(-1), "b"), {1, 2}},
            {make_curve(Rat(0), Rat(0), Rat(1), Rat(0), Rat(0), "c"), {1, 3}},
            {make_curve(Rat(1), Rat(-1), Rat(-1), Rat(0), Rat(0), "d"), {1, 4}},
            {make_curve(Rat(0), Rat(-1), Rat(-1), Rat(0), Rat(0), "e"), {1, 5}},
            {make_curve(Rat(0), Rat(-2), Rat(-2), Rat(0), Rat(0), "f"), {1, 6}},
            {make_curve(Rat(-1), Rat(-4), Rat(-4), Rat(0), Rat(0), "g"), {1, 7}},
            {make_curve(Rat(-1, 2), Rat(-3), Rat(-3), Rat(0), Rat(0), "h"), {1, 8}},
            {make_curve(Rat(-3), Rat(-12), Rat(-12), Rat(0), Rat(0), "i"), {1, 9}},
            {make_curve(Rat(5, 3), Rat(-2, 3), Rat(-2, 3), Rat(0), Rat(0), "j"), {1, 10}},
            {make_curve(Rat(-1), Rat(-10, 3), Rat(-10, 3), Rat(0), Rat(0), "k"), {1, 12}},
            {make_curve(Rat(0), Rat(0), Rat(0), Rat(-1), Rat(0), "l"), {2, 2}},
            {make_curve(Rat(0), Rat(-1), Rat(0), Rat(-4), Rat(4), "m"), {2, 4}},
            {make_curve(Rat(5, 2), Rat(-3, 4), Rat(-3, 4), Rat(0), Rat(0), "n"), {2, 6}},
            {make_curve(Rat(-7, 3), Rat(-10), Rat(-10), Rat(0), Rat(0), "o"), {2, 8}},
            {make_curve(Rat(0), Rat(-1), Rat(1), Rat(-10), Rat(-20), "p"), {1, 5}},
            {make_curve(Rat(0), Rat(-1), Rat(1), Rat(-7820), Rat(-263580), "q"), {1, 1}},
            {make_curve(Rat(0), Rat(0), Rat(0), Rat(6), Rat(8), "r"), {1, 1}},
            {make_curve(Rat(0), Rat(1), Rat(0), Rat(4), Rat(4), "s"), {1, 6}},
            {make_curve(Rat(1), Rat(0), Rat(0), Rat(-45), Rat(81), "t"), {1, 10}},
            {make_curve(Rat(1), Rat(-1), Rat(1), Rat(-1), Rat(-14), "u"), {1, 4}},
            {make_curve(Rat(1), Rat(-1), Rat(1), Rat(-3), Rat(3), "v"), {1, 7}},
            {make_curve(Rat(0), Rat(1), Rat(0), Rat(-41), Rat(-116), "w"), {1, 2}},
        };
        c.expect(tf.size() >= 20, "fewer than 20 torsion fixtures");
        std::set<std::pair<long, long>> seen;
        for (const auto& [E, want] : tf) {
            TorsionStructure got = torsion_over_Q(E).group;
            TorsionStructure oracle = oracles::lutz_nagell_torsion(E);
            if (!(got == want) || !(oracle == want)) {
                c.expect(false, E.label + ": got " + got.str() + ", oracle " + oracle.str() +
                                    ", expected " + want.str());
            }
            seen.insert({want.a, want.b});
        }
        c.expect(seen.size() == 15, "Mazur groups covered: " + std::to_string(seen.size()));
        });
        c.finish(0);
    }

    // 10. determinism of the fast tier and recheck of every emitted certificate
    {
        Criterion c("10. determinism (fast tier twice) and recheck");
        c.guarded([&] {
        int rc1 = 0, rc2 = 0;
        std::string dir1 = "/tmp/ttower_accept_run1", dir2 = "/tmp/ttower_accept_run2";
        std::system(("rm -rf " + dir1 + " " + dir2 + " && mkdir -p " + dir1 + " " + dir2).c_str());
        std::string out1 = run_cli("verify --all --tier fast --seed 0 --out " + dir1, &rc1);
        std::string out2 = run_cli("verify --all --tier fast --seed 0 --out " + dir2, &rc2);
        // exit code 1 is expected here: the S5.p2.cm8 lemma carries the
        // documented refutation of its as-stated claim (see criterion 8)
        c.expect(rc1 == rc2, "exit codes differ between runs");
        c.expect(rc1 == 0 || rc1 == 1, "unexpected exit " + std::to_string(rc1));
        // reports byte-identical modulo timing fields; certificates recheck green
        unsigned certs = 0;
        for (const auto& e : lemma_registry()) {
            if (e.full_tier_only) continue;
            std::string safe_id = e.id;
            for (auto& ch : safe_id)
                if (ch == '/' || ch == ':') ch = '_';
            std::ifstream f1(dir1 + "/" + safe_id + ".json"), f2(dir2 + "/" + safe_id + ".json");
            c.expect(f1.good() && f2.good(), "missing report for " + e.id);
            if (!f1.good() || !f2.good()) continue;
            json j1 = json::parse(f1), j2 = json::parse(f2);
            c.expect(strip_timing(j1).dump() == strip_timing(j2).dump(),
                     "report differs between runs: " + e.id);
            // recheck every certificate in the bundle
            std::function<void(const json&)> walk = [&](const json& node) {
                if (node.is_object()) {
                    if (node.contains("schema") && node["schema"] == "norootcert/1" &&
                        node.contains("curve_label")) {
                        auto curve = db.find(node["curve_label"].get<std::string>());
                        if (curve) {
                            RecheckResult rr = recheck_certificate(node, curve);
                            c.expect(rr.ok, "recheck failed for a certificate in " + e.id + ": " + rr.detail);
                            ++certs;
                        }
                    }
                    for (auto it = node.begin(); it != node.end(); ++it) walk(it.value());
                } else if (node.is_array()) {
                    for (const auto& v : node) walk(v);
                }
            };
            walk(j1);
        }
        c.expect(certs > 0, "no certificates found in the evidence bundles");
        });
        c.finish(0);
    }

    std::printf("%s: %d criterion(s) failed\n", failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
                failures);
    return failures == 0 ? 0 : 1;
}
