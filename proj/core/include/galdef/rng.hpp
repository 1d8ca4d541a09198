#pragma once

#include <cstdint>

namespace galdef {

/// Seeded deterministic generator used for all randomized trials.
/// Algorithm: splitmix64 (64-bit state; output = mix of the incremented state).
/// Identical seeds reproduce identical streams on every platform.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, bound). bound must be > 0.
    uint64_t below(uint64_t bound) {
        // rejection sampling keeps the stream unbiased
        uint64_t limit = bound * (UINT64_MAX / bound);
        uint64_t v = next();
        while (v >= limit) v = next();
        return v % bound;
    }

    /// Split off an independent stream (for per-grid-point determinism).
    Rng fork(uint64_t tag) {
        return Rng(state_ ^ (0x5851f42d4c957f2dULL * (tag + 1)));
    }

private:
    uint64_t state_;
};

} // namespace galdef
