#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace qmac {

// All randomized operations draw from std::mt19937_64 through the helpers
// below, so a (seed, draw order) pair pins every result bit-exactly on any
// conforming platform. Per-trial streams are derived as
// mt19937_64(seed ^ splitmix64(trial_index)) so trials can run in any order
// or in parallel without changing the outcome.

constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

inline std::mt19937_64 trial_stream(std::uint64_t seed, std::uint64_t trial_index) {
    return std::mt19937_64(seed ^ splitmix64(trial_index));
}

// Uniform double in [0, 1) from the top 53 bits of one generator draw.
// Used instead of std::uniform_real_distribution, whose output is not
// specified bit-exactly by the standard.
inline double uniform_double(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

// Index sampled from a probability vector by inverse CDF; the final bucket
// absorbs rounding slack.
inline int sample_index(std::mt19937_64& gen, std::span<const double> probs) {
    const double u = uniform_double(gen);
    double acc = 0.0;
    for (size_t i = 0; i + 1 < probs.size(); ++i) {
        acc += probs[i];
        if (u < acc) return static_cast<int>(i);
    }
    return static_cast<int>(probs.size()) - 1;
}

// Flat Dirichlet sample over the n-simplex via normalized exponentials.
inline std::vector<double> sample_simplex(std::mt19937_64& gen, int n) {
    std::vector<double> out(static_cast<size_t>(n));
    double total = 0.0;
    for (auto& v : out) {
        double u = uniform_double(gen);
        if (u <= 0.0) u = 0x1.0p-53;
        v = -std::log(u);
        total += v;
    }
    for (auto& v : out) v /= total;
    return out;
}

}  // namespace qmac
