// SPDX-License-Identifier: Apache-2.0
//
// SplitMix64-based generator with explicit double/Gaussian conversions.
// std::mt19937 plus the standard distributions is not reproducible across
// library implementations, and channel draws must be; everything here is
// plain IEEE arithmetic on a fixed 64-bit stream.

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace thzprec {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53 significant bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    // Uniform integer in [0, n) via 128-bit multiply-shift.
    std::uint64_t below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    // Standard normal via Box-Muller; consumes two uniforms per pair.
    double next_gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = next_double();
        while (u1 <= 0.0) u1 = next_double();
        const double u2 = next_double();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * M_PI * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    // Circularly symmetric complex normal CN(0, 1).
    std::complex<double> next_cnormal() {
        const double re = next_gaussian();
        const double im = next_gaussian();
        return {re * M_SQRT1_2, im * M_SQRT1_2};
    }

    // Zero-mean Laplace draw with the given scale, via inverse CDF.
    double next_laplace(double scale) {
        const double u = next_double() - 0.5;
        const double mag = -scale * std::log(1.0 - 2.0 * std::abs(u));
        return u < 0.0 ? -mag : mag;
    }

private:
    std::uint64_t state_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

// Derives an independent stream for a named purpose from a base seed.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream_tag) {
    SplitMix64 mix(base ^ (0xD1B54A32D192ED03ULL * (stream_tag + 1)));
    return mix.next_u64();
}

}  // namespace thzprec
