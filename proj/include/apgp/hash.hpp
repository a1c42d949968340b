#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace apgp {

/// FNV-1a 64-bit. Deterministic across platforms and builds; used for cache
/// keys and template-pack fingerprints, not for security.
constexpr std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (char c : data) {
        hash ^= static_cast<unsigned char>(c);
        hash *= 0x100000001b3ULL;
    }
    return hash;
}

std::string to_hex(std::uint64_t value);

}  // namespace apgp
