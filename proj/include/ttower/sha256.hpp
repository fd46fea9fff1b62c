#ifndef TTOWER_SHA256_HPP
#define TTOWER_SHA256_HPP

#include <cstdint>
#include <string>

namespace ttower {

// hex digest of the SHA-256 of a byte string
std::string sha256_hex(const std::string& data);

} // namespace ttower

#endif
