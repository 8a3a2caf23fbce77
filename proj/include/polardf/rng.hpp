// rng.hpp - deterministic random plumbing for the noise model and the
// Monte Carlo harness. Everything here is fixed-algorithm on purpose so a
// given (seed, grid index, trial index) yields the same noise bytes on any
// platform, serial or parallel.

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <utility>

namespace polardf {

/// SplitMix64 finalizer; the building block of the seed derivation below.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Per-trial seed: splitmix64 applied to the master seed, then re-mixed
/// with the grid index and the trial index in turn. Trials are independent
/// streams regardless of evaluation order.
constexpr std::uint64_t derive_trial_seed(std::uint64_t master_seed,
                                          std::uint64_t grid_index,
                                          std::uint64_t trial_index) {
    std::uint64_t s = splitmix64(master_seed);
    s = splitmix64(s ^ grid_index);
    s = splitmix64(s ^ trial_index);
    return s;
}

/// Uniform double in [0, 1) from the top 53 bits of one engine draw.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// One Box-Muller pair of independent standard normal deviates. Hand-rolled
/// (rather than std::normal_distribution) so the byte stream does not depend
/// on the standard-library implementation.
inline std::pair<double, double> normal_pair(std::mt19937_64& rng) {
    const double u1 = 1.0 - uniform01(rng);  // (0, 1], keeps log finite
    const double u2 = uniform01(rng);
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double w = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(w), r * std::sin(w)};
}

}  // namespace polardf
