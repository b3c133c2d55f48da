#ifndef NETSAMPLE_RNG_HPP
#define NETSAMPLE_RNG_HPP

#include <cstdint>
#include <random>

namespace netsample {

// splitmix64 mix of (master, index); used everywhere a run, walker, or trial
// needs its own independent stream.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline std::mt19937_64 make_rng(std::uint64_t master, std::uint64_t index) {
    return std::mt19937_64(derive_seed(master, index));
}

}  // namespace netsample

#endif
