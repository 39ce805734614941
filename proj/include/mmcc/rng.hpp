#pragma once

// Seeded randomness helpers. All randomness in the library flows through
// these so that outputs are reproducible bit-for-bit across platforms
// (std::mt19937_64 is fully specified; std distributions are not, so the
// uniform mappings are done by hand).

#include <cstdint>
#include <random>
#include <vector>

namespace mmcc {

// splitmix64, used to derive independent stream seeds from (seed, tags).
inline std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
    return mix_seed(seed ^ mix_seed(a ^ mix_seed(b)));
}

// Uniform double in (0,1), 53-bit resolution, endpoint-free.
inline double uniform01(std::mt19937_64& rng) {
    return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

// Uniform integer in [0, n), n >= 1. Plain modulo; bias is irrelevant here
// and determinism is what matters.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
    return rng() % n;
}

inline std::vector<int> shuffled_indices(std::size_t count, std::uint64_t seed) {
    std::vector<int> idx(count);
    for (std::size_t i = 0; i < count; ++i) idx[i] = static_cast<int>(i);
    std::mt19937_64 rng(seed);
    for (std::size_t i = count; i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(uniform_below(rng, i));
        std::swap(idx[i - 1], idx[j]);
    }
    return idx;
}

}  // namespace mmcc
