#pragma once

#include <cstdint>
#include <random>

namespace eot {

// Deterministic seedable generator. All randomness in the library flows
// through this wrapper so runs are bit-reproducible across platforms:
// mt19937_64 output is fully specified by the standard, and the bounded /
// real / bernoulli draws below avoid implementation-defined distributions.
class Rng {
public:
    explicit Rng(uint64_t seed) : seed_(seed), eng_(mix(seed)) {}

    uint64_t seed() const { return seed_; }

    uint64_t next_u64() { return eng_(); }

    // Uniform in [0, bound); bound >= 1. Rejection sampling on a bitmask.
    uint64_t below(uint64_t bound) {
        if (bound <= 1) return 0;
        uint64_t mask = ~uint64_t{0} >> __builtin_clzll((bound - 1) | 1);
        for (;;) {
            uint64_t v = eng_() & mask;
            if (v < bound) return v;
        }
    }

    int bit() { return static_cast<int>(eng_() >> 63); }

    // 53-bit uniform in [0,1).
    double real() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return real() < p; }

    // Independent child generator for worker `index`; derived from the
    // original seed, not from engine state, so trials are order-free.
    Rng derive(uint64_t index) const {
        return Rng(mix(seed_ ^ (0x9e3779b97f4a7c15ULL * (index + 1))));
    }

private:
    static uint64_t mix(uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    uint64_t seed_;
    std::mt19937_64 eng_;
};

} // namespace eot
