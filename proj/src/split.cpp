#include "ttower/split.hpp"

#include <sstream>

#include "ttower/rat_factor.hpp"

namespace ttower {

bool splits_completely(const FieldSpec& field, std::uint64_t q) {
    switch (field.kind) {
        case FieldKind::Q:
            return true;
        case FieldKind::LAYER: {
            std::uint64_t m = field.conductor();
            if (q % field.p == 0) return false;
            if (field.p == 2) {
                std::uint64_t r = q % m;
                return r == 1 || r == m - 1;
            }
            return pow_mod(q % m, field.p - 1, m) == 1;
        }
        case FieldKind::CYCLO:
            return q % field.conductor() == 1;
        case FieldKind::SUBCYCLO: {
            std::uint64_t m = field.conductor();
            if (q % field.p == 0) return false;
            std::uint64_t e = euler_phi_u64(m) / field.d;
            return pow_mod(q % m, e, m) == 1;
        }
        case FieldKind::COMPOSITUM: {
            for (const auto& part : field.parts)
                if (!splits_completely(part, q)) return false;
            return true;
        }
        case FieldKind::TOWER:
            throw std::domain_error("splits_completely: tower input");
    }
    throw std::logic_error("unreachable");
}

std::string split_condition_str(const FieldSpec& field) {
    std::ostringstream os;
    switch (field.kind) {
        case FieldKind::Q:
            return "true";
        case FieldKind::LAYER:
            if (field.p == 2)
                os << "q = +-1 (mod " << field.conductor() << ")";
            else
                os << "q^" << (field.p - 1) << " = 1 (mod " << field.conductor() << ")";
            return os.str();
        case FieldKind::CYCLO:
            os << "q = 1 (mod " << field.conductor() << ")";
            return os.str();
        case FieldKind::SUBCYCLO:
            os << "q^" << (euler_phi_u64(field.conductor()) / field.d) << " = 1 (mod "
               << field.conductor() << ")";
            return os.str();
        case FieldKind::COMPOSITUM: {
            if (field.parts.empty()) return "true";
            for (std::size_t i = 0; i < field.parts.size(); ++i) {
                if (i) os << " and ";
                os << split_condition_str(field.parts[i]);
            }
            return os.str();
        }
        case FieldKind::TOWER:
            throw std::domain_error("split_condition_str: tower input");
    }
    throw std::logic_error("unreachable");
}

std::vector<std::uint64_t> find_split_primes(const FieldSpec& field, unsigned count,
                                             const std::set<std::uint64_t>& excluded,
                                             std::uint64_t cap) {
    std::vector<std::uint64_t> out;
    if (count == 0) return out;
    std::uint64_t q = 1;
    while (out.size() < count) {
        q = next_prime_u64(q);
        if (q > cap)
            throw resource_exhausted("find_split_primes: search bound exceeded for " + field.str());
        if (excluded.count(q)) continue;
        if (splits_completely(field, q)) out.push_back(q);
    }
    return out;
}

} // namespace ttower
