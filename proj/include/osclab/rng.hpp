#pragma once

#include <cstdint>

namespace osclab {

/// splitmix64: tiny, portable, seedable 64-bit generator. Identical output
/// on every platform for a given seed, which is what campaign determinism
/// rests on.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    /// Uniform in [0, n); n must be > 0 (small n, modulo bias negligible
    /// for the generator's use here and irrelevant for determinism).
    std::uint64_t next_below(std::uint64_t n) { return next() % n; }

private:
    std::uint64_t state_;
};

/// Per-sample seed: hash of (master seed, sample index) so that parallel
/// and serial runs generate identical samples.
inline std::uint64_t per_sample_seed(std::uint64_t master, std::uint64_t index) {
    SplitMix64 g(master ^ (0x9E3779B97F4A7C15ULL * (index + 1)));
    return g.next();
}

} // namespace osclab
