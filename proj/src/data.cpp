#include "gpelab/data.hpp"

#include <cmath>
#include <numbers>

#include "gpelab/errors.hpp"

namespace gpelab {

double Rng::normal() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (tag + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

bool in_dealiased_band(const Grid& grid, std::size_t flat) {
    const auto idx = grid.multi_index(flat);
    const int cutoff = grid.n() / 3;
    for (int a = 0; a < grid.dim(); ++a)
        if (std::abs(grid.wavenumber(idx[a])) > cutoff) return false;
    return true;
}

Field rough_datum(const Grid& grid, double s, std::uint64_t seed) {
    Rng rng(seed);
    Field c(grid, Representation::Spectral);
    const double decay = -s - 0.5 * grid.dim() - 0.01;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double phase = 2.0 * std::numbers::pi * rng.uniform();  // drawn for every mode
        if (!in_dealiased_band(grid, i)) continue;
        const double xn = grid.frequency_norm(i);
        c[i] = std::pow(1.0 + xn * xn, 0.5 * decay) * std::polar(1.0, phase);
    }
    c *= 1.0 / sobolev_norm(c, s);
    return c;
}

Field gaussian_datum(const Grid& grid, double amplitude, double width, double k0) {
    const double half = 0.5 * grid.length();
    return sample(grid, [&](const Vec3& x) {
        double r2 = 0.0;
        for (int a = 0; a < grid.dim(); ++a) r2 += (x[a] - half) * (x[a] - half);
        return amplitude * std::exp(-r2 / (width * width)) * std::polar(1.0, k0 * x[0]);
    });
}

Field band_random(const Grid& grid, const FrequencyBand& band, std::uint64_t seed) {
    if (!band_resolvable(grid, band)) throw DomainError("frequency band not resolvable on grid");
    Rng rng(seed);
    Field c(grid, Representation::Spectral);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double re = rng.normal();
        const double im = rng.normal();
        if (band.contains(grid.frequency_norm(i)) && !grid.is_nyquist(i)) c[i] = Complex{re, im};
    }
    const double norm = l2_norm(c);
    if (norm == 0.0) throw DomainError("frequency band holds no usable modes");
    c *= 1.0 / norm;
    return c;
}

}  // namespace gpelab
