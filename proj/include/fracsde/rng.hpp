#pragma once

#include <cmath>
#include <cstdint>

namespace fracsde {

// Counter-based random numbers: every draw is a pure function of
// (seed, stream, counter), so Monte Carlo runs are reproducible bit for bit
// regardless of how paths are scheduled across threads. The mixer is the
// SplitMix64 finalizer (Steele/Lea/Flood; Vigna's fixed-increment variant)
// applied to the keyed counter.
namespace rng {

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// 64 uniform bits for key (seed, stream, counter).
inline std::uint64_t bits(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
    std::uint64_t z = mix64(seed + kGolden * (stream + 1));
    z = mix64(z + kGolden * (counter + 1));
    return mix64(z);
}

/// Uniform draw in (0, 1]; never returns 0 so it is safe inside log().
inline double uniform(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
    return static_cast<double>((bits(seed, stream, counter) >> 11) + 1) * 0x1.0p-53;
}

/// Standard normal draw via Box-Muller, one value per (stream, counter) key.
inline double normal(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
    const double u1 = uniform(seed, stream, 2 * counter);
    const double u2 = uniform(seed, stream, 2 * counter + 1);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
}

} // namespace rng
} // namespace fracsde
