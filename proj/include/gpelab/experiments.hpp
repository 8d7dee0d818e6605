#pragma once

#include <vector>

#include "gpelab/dynamics.hpp"
#include "gpelab/fit.hpp"
#include "gpelab/step_law.hpp"

namespace gpelab {

struct AlmostConservationOptions {
    double dt = 6.25e-5;
    int diagnostics_every = 10;
};

struct AlmostConservationRow {
    double N;
    double increment;         // sup over sampled t in [0, window] of |E(I u(t)) - E(I u0)|
    double increment_window;  // value at t = window
    double increment_delta;   // value at t = min(delta, window), linearly interpolated
    double delta;             // delta_step(N, s, ||grad I u0||^2)
    double gradI_norm;        // ||grad I u0||
};

struct AlmostConservationResult {
    std::vector<AlmostConservationRow> rows;
    ExponentFit fit;           // increment vs N
    double energy_drift = 0.0; // sup |E(u(t)) - E(u0)|: the splitting-error floor
    bool monotone = false;     // increments strictly decreasing in N
};

/// A single trajectory serves every N: the flow does not depend on N, only
/// the diagnostics do.
AlmostConservationResult almost_conservation_experiment(const Field& u0, double s,
                                                        const std::vector<double>& N_list,
                                                        double window,
                                                        const AlmostConservationOptions& opts = {});

struct GlobalSegment {
    double t_start;
    double delta;
    int substeps;
    double modified_energy;  // E(I u) at segment start
};

struct GlobalRun {
    std::vector<GlobalSegment> segments;
    Trajectory trajectory;  // reports at every segment boundary, including t = T
    double initial_modified_energy = 0.0;
    double ratio = 0.0;  // max_k |E(I u(t_k)) - E(I u0)| / E(I u0)
    bool flagged = false;  // ratio >= 2
};

/// Advances to T in segments of length delta_step(N, s, ||grad I u||^2)
/// recomputed at each segment start; each segment uses substeps of size
/// <= dt_max. Blow-up propagates.
GlobalRun iterate_global(const Field& u0, double s, double N, double T, double dt_max = 1e-3);

}  // namespace gpelab
