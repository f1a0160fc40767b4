#pragma once

#include <cstdint>
#include <random>

namespace faco {

/// Seedable generator with a fully specified output sequence.
///
/// The engine is MT19937-64 with its standard seeding procedure. Doubles are
/// built from the top 53 bits of one engine output, and bounded integers use
/// rejection sampling on the raw output, so nothing depends on the
/// implementation-defined std:: distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform double in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x = engine_();
        while (x >= limit) {
            x = engine_();
        }
        return x % bound;
    }

    bool bernoulli(double p) { return uniform() < p; }

private:
    std::mt19937_64 engine_;
};

constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Seed for the stream owned by one ant in one iteration.
constexpr std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t iteration, std::uint64_t ant) {
    return splitmix64(splitmix64(splitmix64(seed) ^ iteration) ^ ant);
}

}  // namespace faco
