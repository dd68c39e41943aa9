#pragma once

#include <cstdint>
#include <random>

namespace dengue::moea {

/// Single RNG type used everywhere; one single-owner instance per algorithm
/// run. Campaign run k is seeded with base_seed + k.
using Rng = std::mt19937_64;

inline double unit_uniform(Rng& rng)
{
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

inline std::size_t uniform_index(Rng& rng, std::size_t n)
{
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

inline double standard_normal(Rng& rng)
{
    return std::normal_distribution<double>(0.0, 1.0)(rng);
}

}  // namespace dengue::moea
