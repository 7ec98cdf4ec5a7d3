#pragma once

#include <cstdint>
#include <random>

namespace specrange::rng {

// SplitMix64 finalizer. Used only to derive independent stream seeds from a
// user seed, so that trial k of a sweep does not depend on how many draws
// trials 0..k-1 consumed.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
    return splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x632BE59BD9B4E019ULL));
}

// std::mt19937_64 is fully specified by the standard, so its raw output is
// identical on every conforming platform. Distributions are not, which is why
// callers take bits directly (see fair_bit) instead of using
// std::bernoulli_distribution.
using Engine = std::mt19937_64;

inline Engine make_engine(std::uint64_t seed, std::uint64_t stream = 0) {
    return Engine(stream_seed(seed, stream));
}

inline bool fair_bit(Engine& engine) { return (engine() >> 63) != 0; }

// Uniform double in [0, 1) from the top 53 bits.
inline double unit_double(Engine& engine) {
    return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

}  // namespace specrange::rng
