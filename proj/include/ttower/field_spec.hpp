#ifndef TTOWER_FIELD_SPEC_HPP
#define TTOWER_FIELD_SPEC_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ttower/gaussian_period.hpp"

namespace ttower {

enum class FieldKind { Q, LAYER, CYCLO, SUBCYCLO, COMPOSITUM, TOWER };

enum class TowerKind { K, K5, ZP, CYCLO_TOWER };

// Symbolic field description. Finite kinds:
//   Q                    the rationals (empty compositum)
//   LAYER(p, n)          Q_{n,p}, degree p^n
//   CYCLO(p, k)          Q(zeta_{p^k})
//   SUBCYCLO(p, k, d)    unique degree-d subfield of Q(zeta_{p^k}), p odd
//   COMPOSITUM(layers)   at most one layer per prime
// Towers: K, K5 (p >= 5 only), ZP(p) = Q_{infinity,p}, CYCLO_TOWER(p) = Q(zeta_{p^infinity})
struct FieldSpec {
    FieldKind kind = FieldKind::Q;
    std::uint64_t p = 0;
    unsigned n = 0;     // layer index / cyclo exponent k
    std::uint64_t d = 0; // SUBCYCLO degree
    std::vector<FieldSpec> parts;
    TowerKind tower = TowerKind::K;

    static FieldSpec Q();
    static FieldSpec layer(std::uint64_t p, unsigned n);
    static FieldSpec cyclo(std::uint64_t p, unsigned k);
    static FieldSpec subcyclo(std::uint64_t p, unsigned k, std::uint64_t d);
    static FieldSpec compositum(std::vector<FieldSpec> layers);
    static FieldSpec tower_K();
    static FieldSpec tower_K5();
    static FieldSpec tower_Zp(std::uint64_t p);
    static FieldSpec tower_cyclo(std::uint64_t p);

    bool is_tower() const { return kind == FieldKind::TOWER; }
    bool is_rationals() const;
    std::uint64_t degree() const; // finite kinds only
    std::uint64_t conductor() const; // finite kinds only
    std::string str() const;
    bool operator==(const FieldSpec& o) const { return str() == o.str(); }
};

// parse the CLI/JSON syntax: "Q", "K", "K5", "Zp:5", "cyclo:2^5", "layer:5.1",
// "subcyclo:7^2:21", "K:d=10", "K5:d=35", "comp(layer:2.1,layer:3.2)"
FieldSpec parse_field_spec(const std::string& s);

// unique subfield of the tower of degree dd, or nullopt (spec: NONE)
std::optional<FieldSpec> unique_subfield(const FieldSpec& tower, std::uint64_t dd);

// Gaussian-period presentation of a finite field spec (cached)
const SubfieldPresentation& field_presentation(const FieldSpec& f);

} // namespace ttower

#endif
