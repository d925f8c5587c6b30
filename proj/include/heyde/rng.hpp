#pragma once

#include <cstdint>

namespace heyde {

/// SplitMix64: the 64-bit generator used for every randomized campaign.
///
/// State advances by the golden-ratio increment; outputs are the finalized
/// mix of the state. Trial i of a campaign with seed s runs on an
/// independent generator seeded with stream_element(s, i), so campaigns are
/// reproducible and trials can be evaluated in any order.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, n). Uses rejection to avoid modulo bias.
    std::uint64_t below(std::uint64_t n) {
        if (n <= 1) return 0;
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % n;
    }

    /// Uniform double in [0, 1).
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

    bool coin() { return (next() & 1u) != 0; }

    /// Element i of the stream started at `seed`; used to derive per-trial
    /// seeds: SplitMix64(stream_element(campaign_seed, trial)).
    static std::uint64_t stream_element(std::uint64_t seed, std::uint64_t i) {
        SplitMix64 g(seed + i * 0x9E3779B97F4A7C15ULL);
        return g.next();
    }

private:
    std::uint64_t state_;
};

}  // namespace heyde
