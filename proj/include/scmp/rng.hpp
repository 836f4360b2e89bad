#pragma once

#include <cstdint>

namespace scmp {

/// SplitMix64. Small, owned generator so that sampled streams are identical
/// across platforms and standard-library versions.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in (0, 1): 53 random mantissa bits, zero remapped to 2^-53.
    double next_unit() {
        double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
        return u > 0.0 ? u : 0x1.0p-53;
    }
};

/// Stream for one unit of work, derived from (master seed, index) so results
/// do not depend on scheduling or thread count.
inline SplitMix64 substream(std::uint64_t master_seed, std::uint64_t index) {
    SplitMix64 g(master_seed ^ (0xD1B54A32D192ED03ULL * (index + 1)));
    g.next();
    g.next();
    return g;
}

}  // namespace scmp
