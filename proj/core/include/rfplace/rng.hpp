#pragma once

#include <cstdint>
#include <random>

namespace rfplace {

// All randomized code in this library draws through these helpers so that a
// seed reproduces the same scenario / placement on any platform. mt19937_64
// output is fully specified by the standard; the [0,1) mapping below keeps
// the conversion explicit instead of relying on distribution internals,
// which are implementation-defined.

inline double uniform01(std::mt19937_64& rng) {
    // 53 mantissa bits -> uniform double in [0, 1)
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(rng);
}

// splitmix64 step; used to derive independent child seeds (per particle,
// per cluster, per sweep cell) from one user-facing seed.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0) {
    std::uint64_t s = base;
    splitmix64(s);
    s ^= a * 0x9e3779b97f4a7c15ULL;
    splitmix64(s);
    s ^= b * 0xd1b54a32d192ed03ULL;
    return splitmix64(s);
}

}  // namespace rfplace
