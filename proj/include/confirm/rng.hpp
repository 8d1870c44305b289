#pragma once

// Reproducible random streams. Every stochastic result in the toolkit
// records (reps, seed); replicates are split across a fixed number of
// logical worker streams derived from (seed, worker index) with SplitMix64,
// so results do not depend on scheduling and are bit-identical across runs.
//
// Normal variates use the inverse-CDF transform rather than
// std::normal_distribution, whose output sequence is implementation-defined.

#include <cstdint>
#include <random>

#include "confirm/normal.hpp"

namespace confirm {

struct SplitMix64 {
    std::uint64_t state;

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
};

inline std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t stream_index) {
    SplitMix64 sm{seed};
    std::uint64_t s = sm.next();
    for (std::uint64_t i = 0; i < stream_index; ++i) s = sm.next();
    return s;
}

class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream_index)
        : engine_(derive_stream_seed(seed, stream_index)) {}

    // Uniform in the open interval (0, 1).
    double uniform01() {
        return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
    }

    double normal(double mu, double sd) { return mu + sd * norm_quantile(uniform01()); }

    double bernoulli_bit(double p) { return uniform01() < p ? 1.0 : 0.0; }

private:
    std::mt19937_64 engine_;
};

// Fixed logical worker count for replicate splitting.
inline constexpr int kMcWorkers = 8;

}  // namespace confirm
