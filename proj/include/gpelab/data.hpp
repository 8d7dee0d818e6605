#pragma once
//
// Seeded synthetic data. All generators are bit-reproducible across
// platforms: mt19937_64 output is converted to doubles by hand instead of
// going through <random> distributions, whose algorithms are unspecified.
//
#include <cstdint>
#include <random>

#include "gpelab/spectral.hpp"

namespace gpelab {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    /// Standard normal via Box-Muller (no cached second variate).
    double normal();
    std::uint64_t next() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

/// splitmix64 mix of (seed, tag); used to derive independent per-task seeds.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag);

/// Spectral mask of the 2/3 rule: |k_a| < n/3 on every axis.
bool in_dealiased_band(const Grid& grid, std::size_t flat);

/// u^(xi) = <xi>^{-s-d/2-0.01} e^{i theta}, restricted to the dealiased band
/// and scaled to ||u||_{H^s} = 1.
Field rough_datum(const Grid& grid, double s, std::uint64_t seed);

/// Smooth localized bump a * exp(-|x - c|^2 / w^2) * exp(i k0 x_1) centered in
/// the box (real-analytic up to exponentially small periodization error).
Field gaussian_datum(const Grid& grid, double amplitude, double width, double k0 = 0.0);

/// Random-phase data on a dyadic annulus, normalized to unit L^2 norm.
Field band_random(const Grid& grid, const FrequencyBand& band, std::uint64_t seed);

}  // namespace gpelab
