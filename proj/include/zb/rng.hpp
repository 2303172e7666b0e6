#pragma once
// Counter-based hashing RNG. Sample i of a seeded stream is a pure function
// of (seed, i), so work can be split across workers in any order without
// changing the draw.

#include <cstdint>

namespace zb {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// Uniform double in [0, 1) for stream element i of the given seed.
inline double uniform01(std::uint64_t seed, std::uint64_t i) {
    std::uint64_t h = splitmix64(splitmix64(seed) ^ (i + 0x632BE59BD9B4E019ull));
    return (h >> 11) * 0x1.0p-53;
}

} // namespace zb
