#ifndef RESIDUA_DIGEST_HPP
#define RESIDUA_DIGEST_HPP

#include <cstdint>
#include <string>
#include <string_view>

namespace residua {

/// FNV-1a, stable across runs and platforms; used for cache keys and report
/// digests.
inline std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string hex64(std::uint64_t value);

} // namespace residua

#endif
