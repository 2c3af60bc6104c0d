// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>

#include "fockdyn/types.hpp"

namespace fockdyn {

/// splitmix64: state advances by 0x9E3779B97F4A7C15, output is mixed with
/// the 0xBF58476D1CE4E5B9 / 0x94D049BB133111EB constants.  Used for every
/// randomized operation so that reports are bit-reproducible from the seed.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1) with 53 bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform in [-1, 1].
    double symmetric() { return 2.0 * uniform() - 1.0; }

    int sign() { return (next() >> 63) ? 1 : -1; }

    /// Area-uniform point in the disc of the given radius.
    cplx disc(double radius) {
        double r = radius * std::sqrt(uniform());
        double t = 2.0 * M_PI * uniform();
        return cplx(r * std::cos(t), r * std::sin(t));
    }

    /// Point with modulus uniform in [rmin, rmax] and uniform angle.
    cplx annulus(double rmin, double rmax) {
        double r = rmin + (rmax - rmin) * uniform();
        double t = 2.0 * M_PI * uniform();
        return cplx(r * std::cos(t), r * std::sin(t));
    }

  private:
    std::uint64_t state_;
};

}  // namespace fockdyn
