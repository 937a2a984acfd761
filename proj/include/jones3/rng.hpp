#pragma once

#include <cstdint>

namespace jones3 {

// Counter-based deterministic randomness: every draw is a pure function of
// (seed, stream, counter), so sampling loops can be partitioned across
// threads in any order without changing a single bit of the result.

constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

constexpr std::uint64_t counter_rand(std::uint64_t seed, std::uint64_t stream,
                                     std::uint64_t counter) {
    constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;
    std::uint64_t h = mix64(seed + kGamma);
    h = mix64(h + stream * kGamma);
    return mix64(h + counter * kGamma);
}

/// Uniform double in [0, 1).
constexpr double uniform01(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
    return static_cast<double>(counter_rand(seed, stream, counter) >> 11) * 0x1.0p-53;
}

}  // namespace jones3
