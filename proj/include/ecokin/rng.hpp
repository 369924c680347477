#pragma once

#include <cstdint>
#include <random>

namespace ecokin {

// Uniform helpers on top of the standard-pinned mt19937_64 stream.
// std::uniform_real_distribution output differs across library
// implementations, which would break byte-deterministic reports.

inline double uniform_unit(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

inline double uniform_in(std::mt19937_64& gen, double lo, double hi) {
    return lo + (hi - lo) * uniform_unit(gen);
}

inline std::uint64_t uniform_index(std::mt19937_64& gen, std::uint64_t n) {
    return gen() % n;
}

}  // namespace ecokin
