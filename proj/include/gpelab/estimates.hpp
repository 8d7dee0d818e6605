#pragma once

#include <cstdint>
#include <vector>

#include "gpelab/fit.hpp"
#include "gpelab/spectral.hpp"

namespace gpelab {

/// e^{itDelta} f in the sign convention of the solver: u^ -> e^{i|xi|^2 t} u^.
Field free_evolution(const Field& f, double t);

/// 1/q + 3/(2r) = 3/4 and q, r >= 2, to 1e-12; q or r may be kInfinity.
bool strichartz_admissible(double q, double r);

struct MixedNormSpec {
    double q;
    double r;
    double T;
    int m;  // samples, uniformly spaced at t_i = i T / (m - 1)
};

/// (int_0^T ||u(t)||_r^q dt)^{1/q} by trapezoid, or the max for q = kInfinity.
double mixed_norm(const std::vector<Field>& series, const MixedNormSpec& spec);

/// Quintic smootherstep ramp on [0, 0.1T] and [0.9T, T], 1 in between.
double time_cutoff(double t, double T);

struct StrichartzSweepOptions {
    int n = 64;
    double length = 16.0 * 3.141592653589793;
    int samples = 33;
    int seeds = 4;
    std::uint64_t seed = 1;
};

struct StrichartzSweep {
    std::vector<double> centers;  // band centers in lattice-index units
    std::vector<double> ratios;   // mean over seeds of ||e^{itD} f||_{L^q L^r} / ||f||
    ExponentFit fit;              // ratio vs center
};

/// Band centers are lattice indices: the annulus for center c is
/// [c/2, 2c) * 2 pi / L. Inadmissible (q, r) -> DomainError.
StrichartzSweep strichartz_ratio_sweep(double q, double r, const std::vector<double>& centers,
                                       double T, const StrichartzSweepOptions& opts = {});

struct BilinearOptions {
    int n = 64;
    double length = 2.0 * 3.141592653589793;
    int samples = 129;
    std::uint64_t seed = 1;
};

struct BilinearStat {
    double N1, N2;
    std::vector<double> ratios;  // per seed
    double max = 0.0;
    double mean = 0.0;
};

/// Coherent wave packets: f^_j(xi) = a(xi) e^{-i xi . x0} on the annulus
/// [N_j/2, 2N_j) (|xi| in frequency units), a ~ U[0.5, 1.5], x0 uniform per seed,
/// unit L^2 norm. u_j(t) = chi(t) e^{i(t - T/2)Delta} f_j so both packets focus at
/// the window center. Returns statistics of ||u1 u2||_{L^2_{x,t}} / (||f1|| ||f2||).
BilinearStat bilinear_ratio(double N1, double N2, int seeds, double T, const BilinearOptions& opts = {});

/// Same pipeline on caller-supplied data (used for property checks).
double bilinear_ratio_of(const Field& f1, const Field& f2, double T, int samples);

/// Packet generator used by bilinear_ratio: unit L^2 norm, focused at x0.
Field focusing_packet(const Grid& grid, double N, const Vec3& x0, std::uint64_t seed);

struct GnAudit {
    double lhs;    // ||u||_{L^3}
    double line1;  // ||grad u1||^{1/2} ||u1||^{1/2} + || |D|^{1/2} u2 ||
    double line2;  // ||grad u1||^{1/2} ||u1||^{1/2} + || |D|^s u2 ||^{1/(2s)} ||u2||^{1-1/(2s)}
    double line3;  // ||grad u1||^2 + ||u1||^{2/3} + ||u2||^{2/3} + || |D|^s u2 ||^{2/(3-2s)}
    double ratio1, ratio2, ratio3;  // lhs / line_k (infinite if the line vanishes with lhs > 0)
};

/// Smooth split at |xi| in [1, 2]: u1 carries |xi| <= 2, u2 carries |xi| >= 1.
GnAudit gn_l3_audit(const Field& f, double s);

}  // namespace gpelab
