#ifndef TTOWER_SPLIT_HPP
#define TTOWER_SPLIT_HPP

#include <set>
#include <string>
#include <vector>

#include "ttower/field_spec.hpp"

namespace ttower {

// does q split completely in the (finite, abelian) field?
bool splits_completely(const FieldSpec& field, std::uint64_t q);

// human-readable congruence condition, for reports
std::string split_condition_str(const FieldSpec& field);

// the `count` smallest primes splitting completely and not excluded;
// throws resource_exhausted past the search cap (never silent truncation)
std::vector<std::uint64_t> find_split_primes(const FieldSpec& field, unsigned count,
                                             const std::set<std::uint64_t>& excluded,
                                             std::uint64_t cap = 10'000'000);

} // namespace ttower

#endif
