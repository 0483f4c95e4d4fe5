#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace ssdf {

// Thrown for malformed inputs (bad dimensions, invalid files, broken meshes).
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a numerical procedure cannot complete (divergence, no convergence).
struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline uint64_t fnv1a64(const std::string& s) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

// Every pipeline stage draws its own seed from the top-level one so stages are
// independently reproducible: seed' = splitmix64(seed ^ fnv1a(role) ^ mix(a, b)).
inline uint64_t derive_seed(uint64_t seed, const std::string& role, uint64_t a = 0, uint64_t b = 0) {
    return splitmix64(seed ^ fnv1a64(role) ^ splitmix64(a * 0x9e3779b97f4a7c15ull + b));
}

inline std::mt19937 make_rng(uint64_t seed) {
    return std::mt19937(static_cast<uint32_t>(seed ^ (seed >> 32)));
}

// Uniform in [0,1). Raw engine draws only: portable and bit-stable, unlike
// std::uniform_real_distribution whose output is implementation-defined.
inline float uniform_unit(std::mt19937& rng) {
    return static_cast<float>((rng() >> 8) * (1.0 / 16777216.0));
}

inline float uniform_range(std::mt19937& rng, float lo, float hi) {
    return lo + (hi - lo) * uniform_unit(rng);
}

} // namespace ssdf
