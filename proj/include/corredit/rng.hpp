// Copyright (C) 2026 The corredit authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace corredit {

// splitmix64 step, used to derive independent stream seeds from a base seed
// plus indices (image index, step index, purpose tag).  Standard-library
// distributions are implementation-defined, so all sampling goes through Rng
// below to keep outputs identical across platforms.
inline uint64_t mix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline uint64_t derive_seed(uint64_t base, uint64_t a, uint64_t b = 0, uint64_t c = 0) {
    uint64_t s = mix64(base);
    s = mix64(s ^ (a * 0xd6e8feb86659fd93ull));
    s = mix64(s ^ (b * 0xa3b195354a39b70dull));
    s = mix64(s ^ (c * 0x9e3779b97f4a7c15ull));
    return s;
}

// Deterministic RNG: mt19937_64 with fixed uniform/normal mappings.
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    // uniform in [0, 1), 53-bit resolution
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Box-Muller; caches the second variate.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = 0.0;
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * 3.14159265358979323846 * u2;
        spare_ = r * std::sin(theta);
        has_spare_ = true;
        return r * std::cos(theta);
    }

    uint64_t next_u64() { return gen_(); }

    // integer in [0, n)
    uint64_t below(uint64_t n) { return n == 0 ? 0 : gen_() % n; }

private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace corredit
