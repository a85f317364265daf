#pragma once

#include <cstdint>
#include <random>

namespace zsramsey {

using Rng = std::mt19937_64;

/// splitmix64 finalizer applied to state + (index+1)*golden: the index-th
/// output of a splitmix64 stream seeded with `state`.
constexpr auto splitmix64(std::uint64_t state, std::uint64_t index = 0) -> std::uint64_t
{
    std::uint64_t z = state + (index + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline auto uniform_below(Rng & rng, std::uint64_t bound) -> std::uint64_t
{
    return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(rng);
}

}
