#include "ttower/curvedb.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "ttower/tables.hpp"

namespace ttower {

using nlohmann::json;

namespace {

Rat rat_from_json_value(const json& v) {
    if (v.is_number_integer()) return Rat(static_cast<long>(v.get<long long>()));
    if (v.is_string()) {
        Rat r;
        if (mpq_set_str(r.get_mpq_t(), v.get<std::string>().c_str(), 10) != 0)
            throw std::invalid_argument("bad coefficient literal");
        r.canonicalize();
        return r;
    }
    throw std::invalid_argument("coefficient must be integer or string");
}

// labels whose j-invariants the loader checks against the fixture tables
std::optional<Rat> expected_j(const std::string& label) {
    const auto& k = knowledge_tables();
    for (const auto& [p, rows] : k.cm_isogeny_rows)
        for (const auto& row : rows)
            if (row.label == label) return row.j;
    if (label == "14450p1") return k.seventeen_isogeny_j.at(0);
    if (label == "14450p2") return k.seventeen_isogeny_j.at(1);
    return std::nullopt;
}

} // namespace

void CurveDB::ingest_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open curve file: " + path);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        json rec = json::parse(line);
        std::string label = rec.at("label").get<std::string>();
        const json& a = rec.at("ainvs");
        if (a.size() != 5) throw std::runtime_error(path + ": ainvs must have 5 entries");
        Curve E = make_curve(rat_from_json_value(a[0]), rat_from_json_value(a[1]),
                             rat_from_json_value(a[2]), rat_from_json_value(a[3]),
                             rat_from_json_value(a[4]), label);
        std::string source = rec.value("source", "lmfdb");
        if (auto j = expected_j(label)) {
            if (E.j != *j) {
                std::ostringstream os;
                os << path << ":" << lineno << ": curve " << label
                   << " has j = " << E.j.get_str() << ", tables expect " << j->get_str();
                throw std::runtime_error(os.str());
            }
        }
        add(E, source);
    }
}

void CurveDB::add(const Curve& E, const std::string& source) {
    (void)source;
    if (E.label.empty()) throw std::invalid_argument("CurveDB: label required");
    curves_[E.label] = E;
}

const Curve& CurveDB::by_label(const std::string& label) const {
    auto it = curves_.find(label);
    if (it == curves_.end()) throw std::out_of_range("curve not loaded: " + label);
    return it->second;
}

std::optional<Curve> CurveDB::find(const std::string& label) const {
    auto it = curves_.find(label);
    if (it == curves_.end()) return std::nullopt;
    return it->second;
}

std::vector<std::string> CurveDB::labels() const {
    std::vector<std::string> out;
    for (const auto& [l, e] : curves_) out.push_back(l);
    return out;
}

std::vector<std::string> CurveDB::missing_labels(const std::vector<std::string>& required) const {
    std::vector<std::string> out;
    for (const auto& l : required)
        if (!curves_.count(l)) out.push_back(l);
    return out;
}

CurveDB load_default_curvedb() {
    CurveDB db;
    std::string base = "fixtures";
    if (const char* env = std::getenv("TTOWER_FIXTURES")) base = env;
    db.ingest_file(base + "/curves.jsonl");
    std::ifstream probe(base + "/lmfdb_curves.jsonl");
    if (probe.good()) {
        probe.close();
        db.ingest_file(base + "/lmfdb_curves.jsonl");
    }
    return db;
}

} // namespace ttower
