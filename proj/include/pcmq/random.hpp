#pragma once
// Seed derivation and random priority vectors.
//
// Every stochastic routine takes an explicit 64-bit seed. Parallel work derives
// one sub-seed per work item from (master seed, stream, index), so results do
// not depend on how items are split across threads.

#include <cstdint>
#include <random>
#include <vector>

#include "pcmq/error.hpp"
#include "pcmq/pcm.hpp"

namespace pcmq {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Streams keep sub-seeds for different purposes apart.
enum class SeedStream : std::uint64_t {
    Record = 1,
    Vector = 2,
    Run = 3,
    Asi = 4,
};

inline constexpr std::uint64_t derive_seed(std::uint64_t master, SeedStream stream,
                                           std::uint64_t index) noexcept {
    return splitmix64(splitmix64(master ^ splitmix64(static_cast<std::uint64_t>(stream))) + index);
}

inline double uniform01(Rng& rng) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

inline double uniform(Rng& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline std::size_t uniform_index(Rng& rng, std::size_t count) {
    return std::uniform_int_distribution<std::size_t>(0, count - 1)(rng);
}

// Uniform on the open simplex: normalized independent standard exponentials.
inline PriorityVector random_pv(std::size_t n, Rng& rng) {
    if (n < 3) throw ArgumentError("random_pv needs n >= 3");
    std::exponential_distribution<double> expo(1.0);
    std::vector<double> w(n);
    for (auto& x : w) {
        do {
            x = expo(rng);
        } while (!(x > 0.0));
    }
    return PriorityVector::normalized(std::move(w));
}

// All upper-triangle positions (i, j), i < j, in row-major order.
inline std::vector<std::pair<std::size_t, std::size_t>> upper_positions(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    out.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) out.emplace_back(i, j);
    return out;
}

}  // namespace pcmq
