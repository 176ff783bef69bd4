#pragma once

#include <cstdint>
#include <cmath>

namespace focal {

// Deterministic 64-bit counter-based generator (SplitMix64, Steele et al. 2014).
//
// The seed algorithm is part of the external contract so that other
// implementations can reproduce sequences exactly:
//   state_0 = seed
//   next(): state += 0x9E3779B97F4A7C15; z = state;
//           z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9;
//           z = (z ^ (z >> 27)) * 0x94D049BB133111EB;
//           return z ^ (z >> 31);
// uniform():   next() >> 11, scaled by 2^-53  (double in [0,1))
// normal():    Box-Muller on two uniform() draws, the cosine branch only;
//              draws are consumed in call order.
// uniform_int(n): rejection-free draw via 128-bit multiply of next() by n.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // double in [0, 1) with 53 random bits
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // integer in [0, n), n >= 1
    uint64_t uniform_int(uint64_t n) {
        return static_cast<uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    // standard normal deviate; consumes exactly two uniform draws
    double normal() {
        double u1 = uniform();
        double u2 = uniform();
        // guard against log(0)
        if (u1 <= 0.0) u1 = 0x1.0p-53;
        return std::sqrt(-2.0 * std::log(u1)) *
               std::cos(2.0 * 3.14159265358979323846 * u2);
    }

    // derive an independent stream deterministically from this seed and a tag
    static uint64_t derive(uint64_t seed, uint64_t tag) {
        Rng r(seed ^ (0x5851F42D4C957F2DULL * (tag + 1)));
        return r.next_u64();
    }

private:
    uint64_t state_;
};

} // namespace focal
