#pragma once

#include <cstdint>

namespace ilat {

// Counter-based generator: output depends only on (seed, counter), so
// disorder realizations are bit-identical across platforms and runs.
struct CounterRng {
    std::uint64_t seed = 0;
    std::uint64_t counter = 0;

    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t next_u64() { return mix(seed ^ mix(counter++)); }

    // uniform in [0, 1)
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // uniform in [-w/2, w/2]
    double next_symmetric(double w) { return w * (next_double() - 0.5); }
};

} // namespace ilat
