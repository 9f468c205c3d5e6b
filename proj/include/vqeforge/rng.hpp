// This code is part of vqeforge.
//
// (C) Copyright 2026.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license in the LICENSE.txt file in the root
// directory of this source tree or at
// http://www.apache.org/licenses/LICENSE-2.0.

#ifndef VQEFORGE_RNG_HPP_
#define VQEFORGE_RNG_HPP_

#include <cmath>
#include <cstdint>

namespace vqeforge {

// Counter-based pseudo-random generator.
//
// Every output is a pure function of (seed, stream, counter): the counter is
// pushed through the SplitMix64 finalizer after being combined with a
// per-(seed, stream) base offset.  There is no hidden state beyond the
// counter, so results are identical on every platform and independent
// sub-streams can be split off deterministically with derive().
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
        : base_(mix(mix(seed + 0x9E3779B97F4A7C15ull) ^ mix(stream + 0xD1B54A32D192ED03ull))) {}

    std::uint64_t next_u64() {
        return mix(base_ + (counter_++) * 0x9E3779B97F4A7C15ull);
    }

    // Uniform double in [0, 1) with 53 significant bits.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // +1 or -1 with equal probability.
    int rademacher() { return (next_u64() >> 63) ? 1 : -1; }

    // Index in [0, n).
    std::uint64_t index(std::uint64_t n) {
        return static_cast<std::uint64_t>(uniform() * static_cast<double>(n)) % n;
    }

    // Standard normal via Box-Muller; consumes two draws per call.
    double gaussian() {
        double u1 = uniform();
        double u2 = uniform();
        if (u1 <= 0.0) u1 = 0x1.0p-53;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
    }

    // Deterministic independent sub-stream (e.g. one per measurement group).
    CounterRng derive(std::uint64_t substream) const {
        CounterRng r(base_, substream + 0x2545F4914F6CDD1Dull);
        return r;
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t base_;
    std::uint64_t counter_ = 0;
};

} // namespace vqeforge

#endif // VQEFORGE_RNG_HPP_
