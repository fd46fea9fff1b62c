#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "ttower/lemmas.hpp"

using namespace ttower;
using nlohmann::json;

namespace {

SearchConfig config_from(std::uint64_t seed, unsigned witnesses) {
    SearchConfig cfg;
    cfg.factor.seed = seed;
    cfg.certify.min_witnesses = witnesses;
    if (const char* env = std::getenv("TTOWER_BUDGET_MS")) cfg.budget_ms = std::strtoull(env, nullptr, 10);
    return cfg;
}

int run_ingest(const std::string& path) {
    CurveDB db;
    db.ingest_file(path);
    std::cout << "loaded " << db.size() << " curves from " << path << "\n";
    for (const auto& label : db.labels()) {
        const Curve& E = db.by_label(label);
        std::cout << "  " << label << "  j = " << E.j.get_str() << "  disc = " << E.disc.get_str()
                  << "\n";
    }
    return 0;
}

int run_torsion(const std::string& label, const std::string& field_str, std::uint64_t seed) {
    CurveDB db = load_default_curvedb();
    auto E = db.find(label);
    if (!E) {
        std::cerr << "curve not loaded: " << label << "\n";
        return 3;
    }
    FieldSpec field = parse_field_spec(field_str);
    SearchConfig cfg = config_from(seed, 3);
    TorsionReport rep = field.is_tower() ? torsion_over_tower(*E, field, cfg)
                                         : torsion_over_field_report(*E, field, cfg);
    std::cout << rep.to_json().dump(2) << "\n";
    return rep.indeterminate ? 2 : 0;
}

int run_divpoly(const std::string& label, long n, std::uint64_t mod) {
    CurveDB db = load_default_curvedb();
    auto E = db.find(label);
    if (!E) {
        std::cerr << "curve not loaded: " << label << "\n";
        return 3;
    }
    ShortModel M = short_model(*E);
    if (mod) {
        ModPoly f = division_root_poly_mod(M, n, mod);
        std::cout << "psi_" << n << " of " << label << " mod " << mod << " (deg " << f.degree()
                  << "):\n" << f.str() << "\n";
    } else {
        IntPoly f = division_root_poly(M, n);
        std::cout << "psi_" << n << " of " << label << " (deg " << f.degree() << "):\n"
                  << ip_to_rat(f).str() << "\n";
    }
    return 0;
}

int run_certify(const std::string& label, long n, const std::string& field_str, unsigned witnesses,
                const std::string& out_path, std::uint64_t seed) {
    CurveDB db = load_default_curvedb();
    auto E = db.find(label);
    if (!E) {
        std::cerr << "curve not loaded: " << label << "\n";
        return 3;
    }
    FieldSpec field = parse_field_spec(field_str);
    SearchConfig cfg = config_from(seed, witnesses);
    CertifyResult cr = certify_no_root(PolyRecipe::division(*E, n, true), field, cfg.certify);
    if (cr.status == CertifyStatus::CERTIFIED) {
        json doc = cr.cert->to_json();
        if (!out_path.empty()) {
            std::ofstream out(out_path);
            out << doc.dump(2) << "\n";
            std::cout << "certificate written to " << out_path << "\n";
        } else {
            std::cout << doc.dump(2) << "\n";
        }
        return 0;
    }
    std::cerr << (cr.status == CertifyStatus::ROOT_LIKELY ? "ROOT_LIKELY: " : "INDETERMINATE: ")
              << cr.note << "\n";
    return cr.status == CertifyStatus::ROOT_LIKELY ? 1 : 2;
}

int run_verify(const std::string& id, bool all, const std::string& tier, std::uint64_t seed,
               const std::string& out_dir, unsigned jobs) {
    CurveDB db = load_default_curvedb();
    LemmaContext ctx;
    ctx.db = &db;
    ctx.cfg = config_from(seed, 3);
    try {
        if (all) {
            VerifySummary sum = verify_all(ctx, tier == "full", out_dir, jobs);
            for (const auto& e : sum.entries) {
                const char* v = e.verdict == LemmaVerdict::PASS
                                    ? "PASS"
                                    : (e.verdict == LemmaVerdict::FAIL ? "FAIL" : "INDETERMINATE");
                std::cout << v << "  " << e.id << "  (" << e.millis << " ms)  " << e.detail << "\n";
            }
            if (sum.any_fail) return 1;
            if (sum.any_indeterminate) return 2;
            return 0;
        }
        LemmaOutcome o = verify_lemma(id, ctx);
        const char* v = o.verdict == LemmaVerdict::PASS
                            ? "PASS"
                            : (o.verdict == LemmaVerdict::FAIL ? "FAIL" : "INDETERMINATE");
        std::cout << v << "  " << id << "  (" << o.millis << " ms)  " << o.detail << "\n";
        if (!out_dir.empty()) {
            json doc;
            doc["schema"] = "report/1";
            doc["lemma"] = id;
            doc["verdict"] = v;
            doc["detail"] = o.detail;
            doc["artifacts"] = o.artifacts;
            doc["millis"] = o.millis;
            std::string safe_id = id;
            for (auto& ch : safe_id)
                if (ch == '/' || ch == ':') ch = '_';
            std::ofstream out(out_dir + "/" + safe_id + ".json");
            out << doc.dump(2) << "\n";
        }
        if (o.verdict == LemmaVerdict::FAIL) return 1;
        if (o.verdict == LemmaVerdict::INDETERMINATE) return 2;
        return 0;
    } catch (configuration_error& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 3;
    }
}

int run_recheck(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cannot open " << path << "\n";
        return 3;
    }
    json doc = json::parse(in);
    std::optional<Curve> curve;
    if (doc.contains("curve_label")) {
        CurveDB db = load_default_curvedb();
        curve = db.find(doc["curve_label"].get<std::string>());
        if (!curve) {
            std::cerr << "configuration error: curve " << doc["curve_label"] << " not loaded\n";
            return 3;
        }
    }
    RecheckResult r = recheck_certificate(doc, curve);
    std::cout << (r.ok ? "OK" : "FAIL") << ": " << r.detail << "\n";
    return r.ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ttower: torsion growth verification over Z_p-extension towers"};
    app.require_subcommand(1);

    auto* ingest = app.add_subcommand("ingest", "load a curve export and validate j-invariants");
    std::string ingest_path;
    ingest->add_option("file", ingest_path, "JSON-lines curve file")->required();

    auto* torsion = app.add_subcommand("torsion", "torsion report over a tower or finite field");
    std::string t_label, t_field = "K";
    std::uint64_t t_seed = 0;
    torsion->add_option("label", t_label)->required();
    torsion->add_option("--field", t_field, "K | K5 | Zp:<p> | cyclo:<p>^<k> | layer:<p>.<n> | K:d=<d>");
    torsion->add_option("--seed", t_seed);

    auto* divpoly = app.add_subcommand("divpoly", "division polynomial over Q or mod q");
    std::string d_label;
    long d_n = 0;
    std::uint64_t d_mod = 0;
    divpoly->add_option("label", d_label)->required();
    divpoly->add_option("n", d_n)->required();
    divpoly->add_option("--mod", d_mod, "odd prime of good reduction");

    auto* certify = app.add_subcommand("certify", "no-root certificate for a division polynomial");
    std::string c_label, c_field, c_out;
    long c_n = 0;
    unsigned c_wit = 3;
    std::uint64_t c_seed = 0;
    certify->add_option("label", c_label)->required();
    certify->add_option("n", c_n)->required();
    certify->add_option("--field", c_field)->required();
    certify->add_option("--witnesses", c_wit);
    certify->add_option("--out", c_out);
    certify->add_option("--seed", c_seed);

    auto* verify = app.add_subcommand("verify", "run registered lemma verifications");
    std::string v_id, v_tier = "fast", v_out;
    bool v_all = false;
    std::uint64_t v_seed = 0;
    unsigned v_jobs = 1;
    verify->add_option("id", v_id, "lemma id");
    verify->add_flag("--all", v_all, "run every lemma in the tier");
    verify->add_option("--tier", v_tier)->check(CLI::IsMember({"fast", "full"}));
    verify->add_option("--seed", v_seed);
    verify->add_option("--out", v_out, "directory for evidence JSON files");
    verify->add_option("--jobs", v_jobs);

    auto* recheck = app.add_subcommand("recheck", "re-verify a persisted certificate");
    std::string r_path;
    recheck->add_option("certificate", r_path)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*ingest) return run_ingest(ingest_path);
        if (*torsion) return run_torsion(t_label, t_field, t_seed);
        if (*divpoly) return run_divpoly(d_label, d_n, d_mod);
        if (*certify) return run_certify(c_label, c_n, c_field, c_wit, c_out, c_seed);
        if (*verify) {
            if (!v_all && v_id.empty()) {
                std::cerr << "verify: lemma id or --all required\n";
                return 3;
            }
            return run_verify(v_id, v_all, v_tier, v_seed, v_out, v_jobs);
        }
        if (*recheck) return run_recheck(r_path);
    } catch (configuration_error& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 3;
    } catch (std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
