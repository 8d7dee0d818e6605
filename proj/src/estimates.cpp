#include "gpelab/estimates.hpp"

#include <algorithm>
#include <cmath>

#include "gpelab/data.hpp"
#include "gpelab/dynamics.hpp"
#include "gpelab/errors.hpp"

namespace gpelab {

Field free_evolution(const Field& f, double t) { return linear_propagate(f, t); }

bool strichartz_admissible(double q, double r) {
    constexpr double tol = 1e-12;
    if (!(q >= 2.0 - tol) || !(r >= 2.0 - tol)) return false;
    const double iq = std::isinf(q) ? 0.0 : 1.0 / q;
    const double ir = std::isinf(r) ? 0.0 : 1.0 / r;
    return std::abs(iq + 1.5 * ir - 0.75) <= tol;
}

namespace {

// Trapezoid over uniformly spaced samples of ||u(t)||_r.
double time_norm(const std::vector<double>& norms, double q, double T) {
    if (norms.size() < 2) throw DomainError("mixed norm needs two or more time samples");
    if (std::isinf(q)) return *std::max_element(norms.begin(), norms.end());
    const double h = T / static_cast<double>(norms.size() - 1);
    double acc = 0.0;
    for (std::size_t i = 0; i < norms.size(); ++i) {
        const double w = (i == 0 || i + 1 == norms.size()) ? 0.5 : 1.0;
        acc += w * std::pow(norms[i], q);
    }
    return std::pow(acc * h, 1.0 / q);
}

double smootherstep(double x) {
    x = std::clamp(x, 0.0, 1.0);
    return x * x * x * (x * (6.0 * x - 15.0) + 10.0);
}

}  // namespace

double mixed_norm(const std::vector<Field>& series, const MixedNormSpec& spec) {
    if (spec.m < 16) throw DomainError("mixed norm needs m >= 16 samples");
    if (static_cast<int>(series.size()) != spec.m) throw ContractViolation("series length differs from m");
    if (!(spec.q >= 1.0) || !(spec.r >= 1.0)) throw DomainError("mixed norm exponents must be >= 1");
    std::vector<double> norms;
    norms.reserve(series.size());
    for (const auto& f : series) norms.push_back(lp_norm(to_physical(f), spec.r));
    return time_norm(norms, spec.q, spec.T);
}

double time_cutoff(double t, double T) {
    if (t <= 0.0 || t >= T) return 0.0;
    const double edge = 0.1 * T;
    if (t < edge) return smootherstep(t / edge);
    if (t > T - edge) return smootherstep((T - t) / edge);
    return 1.0;
}

StrichartzSweep strichartz_ratio_sweep(double q, double r, const std::vector<double>& centers, double T,
                                       const StrichartzSweepOptions& opts) {
    if (!strichartz_admissible(q, r)) throw DomainError("(q, r) is not Strichartz admissible");
    if (centers.size() < 2) throw DomainError("sweep needs two or more band centers");
    if (opts.samples < 16) throw DomainError("sweep needs >= 16 time samples");
    const Grid grid(3, opts.n, opts.length);
    const double unit = grid.frequency_unit();

    StrichartzSweep out;
    out.centers = centers;
    for (std::size_t c = 0; c < centers.size(); ++c) {
        double sum = 0.0;
        for (int k = 0; k < opts.seeds; ++k) {
            const auto seed = derive_seed(opts.seed, 1000 * c + static_cast<std::uint64_t>(k));
            const Field f = band_random(grid, FrequencyBand::annulus(centers[c] * unit), seed);
            std::vector<double> norms;
            for (int i = 0; i < opts.samples; ++i) {
                const double t = T * i / (opts.samples - 1);
                norms.push_back(lp_norm(to_physical(free_evolution(f, t)), r));
            }
            sum += time_norm(norms, q, T) / l2_norm(f);
        }
        out.ratios.push_back(sum / opts.seeds);
    }
    out.fit = fit_loglog(out.centers, out.ratios);
    return out;
}

Field focusing_packet(const Grid& grid, double N, const Vec3& x0, std::uint64_t seed) {
    const FrequencyBand band = FrequencyBand::annulus(N);
    if (!band_resolvable(grid, band)) throw DomainError("bilinear band not resolvable on the grid");
    Rng rng(seed);
    Field c(grid, Representation::Spectral);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double a = rng.uniform(0.5, 1.5);
        if (!band.contains(grid.frequency_norm(i)) || grid.is_nyquist(i)) continue;
        const Vec3 xi = grid.frequency(i);
        c[i] = std::polar(a, -(xi[0] * x0[0] + xi[1] * x0[1] + xi[2] * x0[2]));
    }
    c *= 1.0 / l2_norm(c);
    return c;
}

double bilinear_ratio_of(const Field& f1, const Field& f2, double T, int samples) {
    if (!(f1.grid() == f2.grid())) throw ContractViolation("bilinear inputs live on different grids");
    if (samples < 16) throw DomainError("bilinear ratio needs >= 16 time samples");
    const Field c1 = to_spectral(f1), c2 = to_spectral(f2);
    const Grid& g = c1.grid();
    const double cell = g.cell_volume();
    const double h = T / (samples - 1);

    // Band-limited data: evolve only the nonzero modes, advancing the phase
    // e^{i|xi|^2 (t - T/2)} by one factor per time sample.
    struct Mode {
        std::size_t index;
        Complex value, step;
    };
    auto support = [&](const Field& c) {
        std::vector<Mode> modes;
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (c[i] == Complex(0.0, 0.0)) continue;
            const double xn = g.frequency_norm(i);
            modes.push_back({i, c[i] * std::polar(1.0, -0.5 * T * xn * xn), std::polar(1.0, h * xn * xn)});
        }
        return modes;
    };
    std::vector<Mode> m1 = support(c1), m2 = support(c2);
    std::vector<Complex> u1(g.size()), u2(g.size());
    auto realize = [&](const std::vector<Mode>& modes, std::vector<Complex>& buf) {
        std::fill(buf.begin(), buf.end(), Complex(0.0, 0.0));
        for (const auto& m : modes) buf[m.index] = m.value;
        inverse_transform_inplace(g, buf);
    };

    std::vector<double> slices(static_cast<std::size_t>(samples), 0.0);
    for (int i = 0; i < samples; ++i) {
        const double chi = time_cutoff(i * h, T);
        if (chi != 0.0) {
            realize(m1, u1);
            realize(m2, u2);
            double acc = 0.0;
            for (std::size_t j = 0; j < u1.size(); ++j) acc += std::norm(u1[j] * u2[j]);
            // ||u1 u2||_{L^2_x}, which time_norm raises back to the power 2.
            slices[static_cast<std::size_t>(i)] = chi * chi * std::sqrt(acc * cell);
        }
        for (auto& m : m1) m.value *= m.step;
        for (auto& m : m2) m.value *= m.step;
    }
    return time_norm(slices, 2.0, T) / (l2_norm(c1) * l2_norm(c2));
}

BilinearStat bilinear_ratio(double N1, double N2, int seeds, double T, const BilinearOptions& opts) {
    if (!(N1 > 0.0) || !(N1 <= N2)) throw DomainError("bilinear ratio needs 0 < N1 <= N2");
    if (seeds < 1) throw DomainError("bilinear ratio needs at least one seed");
    const Grid grid(3, opts.n, opts.length);
    for (double N : {N1, N2})
        if (!band_resolvable(grid, FrequencyBand::annulus(N)))
            throw DomainError("bilinear band not resolvable on the grid");

    BilinearStat out{N1, N2, {}, 0.0, 0.0};
    for (int k = 0; k < seeds; ++k) {
        // Seeds depend on the seed index only, so the focus point is shared
        // across the whole (N1, N2) sweep for a given seed.
        Rng rng(derive_seed(opts.seed, static_cast<std::uint64_t>(k)));
        Vec3 x0{0.0, 0.0, 0.0};
        for (int a = 0; a < grid.dim(); ++a) x0[a] = rng.uniform(0.0, grid.length());
        const Field f1 = focusing_packet(grid, N1, x0, rng.next());
        const Field f2 = focusing_packet(grid, N2, x0, rng.next());
        out.ratios.push_back(bilinear_ratio_of(f1, f2, T, opts.samples));
    }
    for (double r : out.ratios) {
        out.max = std::max(out.max, r);
        out.mean += r;
    }
    out.mean /= static_cast<double>(out.ratios.size());
    return out;
}

GnAudit gn_l3_audit(const Field& f, double s) {
    if (!(s > 0.5 && s < 1.0)) throw DomainError("GN audit needs s in (1/2, 1)");
    const Field c = to_spectral(f);
    const Grid& g = c.grid();
    Field lo(g, Representation::Spectral), hi(g, Representation::Spectral);
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double w = 1.0 - smootherstep(g.frequency_norm(i) - 1.0);  // 1 on |xi| <= 1, 0 on |xi| >= 2
        lo[i] = w * c[i];
        hi[i] = (1.0 - w) * c[i];
    }
    GnAudit a{};
    a.lhs = lp_norm(to_physical(c), 3.0);
    const double g1 = homogeneous_norm(lo, 1.0), m1 = l2_norm(lo);
    const double d_half = homogeneous_norm(hi, 0.5), d_s = homogeneous_norm(hi, s), m2 = l2_norm(hi);
    const double low_term = std::sqrt(g1 * m1);
    a.line1 = low_term + d_half;
    a.line2 = low_term + std::pow(d_s, 1.0 / (2.0 * s)) * std::pow(m2, 1.0 - 1.0 / (2.0 * s));
    a.line3 = g1 * g1 + std::cbrt(m1 * m1) + std::cbrt(m2 * m2) + std::pow(d_s, 2.0 / (3.0 - 2.0 * s));
    auto ratio = [&](double line) {
        if (line > 0.0) return a.lhs / line;
        return a.lhs > 0.0 ? kInfinity : 0.0;
    };
    a.ratio1 = ratio(a.line1);
    a.ratio2 = ratio(a.line2);
    a.ratio3 = ratio(a.line3);
    return a;
}

}  // namespace gpelab
