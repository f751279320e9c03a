#pragma once

#include <array>
#include <cstdint>

namespace monoclt {

// Counter-based PRNG: Philox4x32-10 (Salmon et al., SC 2011).
// A pure function of (key, counter), so any draw is addressable by its
// coordinates and independent of evaluation order. This is what makes
// simulation output identical under any partitioning of the sample range.
namespace philox {

inline constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
inline constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;
inline constexpr std::uint32_t kMult0 = 0xD2511F53u;
inline constexpr std::uint32_t kMult1 = 0xCD9E8D57u;

using Counter = std::array<std::uint32_t, 4>;
using Key = std::array<std::uint32_t, 2>;

inline Counter round_once(const Counter& c, const Key& k) {
    const std::uint64_t p0 = static_cast<std::uint64_t>(kMult0) * c[0];
    const std::uint64_t p1 = static_cast<std::uint64_t>(kMult1) * c[2];
    const auto lo0 = static_cast<std::uint32_t>(p0);
    const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
    const auto lo1 = static_cast<std::uint32_t>(p1);
    const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
    return {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
}

inline Counter block(Counter c, Key k) {
    for (int r = 0; r < 9; ++r) {
        c = round_once(c, k);
        k[0] += kWeyl0;
        k[1] += kWeyl1;
    }
    return round_once(c, k);
}

}  // namespace philox

// SplitMix64 finalizer, used to derive Philox keys from a user seed plus a
// domain tag so that e.g. graph generation and coloring never share a stream.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

inline philox::Key derive_key(std::uint64_t seed, std::uint64_t domain_tag) {
    const std::uint64_t k = mix64(seed ^ mix64(domain_tag));
    return {static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(k >> 32)};
}

// One 64-bit draw addressed by (key, index64, word_a, word_b).
inline std::uint64_t draw_u64(const philox::Key& key, std::uint64_t index,
                              std::uint32_t word_a, std::uint32_t word_b) {
    const philox::Counter ctr = {static_cast<std::uint32_t>(index),
                                 static_cast<std::uint32_t>(index >> 32), word_a, word_b};
    const philox::Counter out = philox::block(ctr, key);
    return static_cast<std::uint64_t>(out[0]) | (static_cast<std::uint64_t>(out[1]) << 32);
}

// Bounded integer in [0, n) by the multiply-shift map (Lemire 2019).
// Per-value probability deviates from 1/n by less than 2^-64 absolute,
// below anything our statistical tolerances can resolve.
inline std::uint32_t bounded(std::uint64_t x, std::uint32_t n) {
    return static_cast<std::uint32_t>(
        (static_cast<unsigned __int128>(x) * n) >> 64);
}

// Uniform double in [0, 1) with 53 random bits.
inline double to_unit_double(std::uint64_t x) {
    return static_cast<double>(x >> 11) * 0x1.0p-53;
}

}  // namespace monoclt
