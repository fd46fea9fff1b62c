#ifndef TTOWER_CURVEDB_HPP
#define TTOWER_CURVEDB_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ttower/curve.hpp"

namespace ttower {

// curve database: JSON lines, one record per curve:
//   {"label": "...", "ainvs": [a1,a2,a3,a4,a6], "source": "lmfdb"|"paper"}
// (large coefficients may be written as strings). Labels named in the
// j-invariant tables are validated against them at load time.
class CurveDB {
  public:
    void ingest_file(const std::string& path);
    void add(const Curve& E, const std::string& source);

    const Curve& by_label(const std::string& label) const;
    std::optional<Curve> find(const std::string& label) const;
    std::vector<std::string> labels() const;
    std::size_t size() const { return curves_.size(); }

    // the labels required by the verifier registry that are missing here
    std::vector<std::string> missing_labels(const std::vector<std::string>& required) const;

  private:
    std::map<std::string, Curve> curves_;
};

// shared fixture loading: the records tagged source="paper" plus, when present, the
// user-supplied LMFDB export (fixtures/curves.jsonl, fixtures/lmfdb_curves.jsonl)
CurveDB load_default_curvedb();

} // namespace ttower

#endif
