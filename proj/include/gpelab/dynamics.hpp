#pragma once
//
// Split-step integration of the shifted Gross-Pitaevskii equation
//
//     i u_t - Lap u + F(u) = 0,   F(u) = (1 + u)(|u|^2 + 2 Re u),
//
// i.e. u^_t = i|xi|^2 u^ (linear part) and u_t = i F(u) (nonlinear part).
//
#include <vector>

#include "gpelab/ioperator.hpp"
#include "gpelab/spectral.hpp"

namespace gpelab {

/// Zero every mode outside the 2/3-rule band. Result is Spectral.
Field dealias(const Field& f);

/// Pointwise F(u); truncated by the 2/3 rule when dealias_output is set.
Field nonlinearity(const Field& f, bool dealias_output = true);

/// Exact linear propagator u^ -> e^{i|xi|^2 t} u^ (t may be negative).
Field linear_propagate(const Field& f, double t);

struct StepOptions {
    bool dealias = true;
    bool nonlinearity_enabled = true;
};

/// One Strang step: half linear, RK4 on u_t = iF(u), half linear.
/// Input in either representation, output Spectral. Throws BlowUp(time + dt)
/// if the result is not finite.
Field step(const Field& f, double dt, const StepOptions& opts = {}, double time = 0.0);

struct EvolveConfig {
    Grid grid;
    double dt;
    double t_end;
    int diagnostics_every = 1;
    bool dealias = true;
    bool nonlinearity_enabled = true;
    bool keep_snapshots = true;  // reports are always kept

    int step_count() const;
    void validate() const;
};

struct Trajectory {
    std::vector<double> times;
    std::vector<Field> snapshots;                      // empty if keep_snapshots is off
    std::vector<EnergyReport> energy;                  // E(u(t_k))
    std::vector<std::vector<EnergyReport>> modified;   // modified[j][k] = E(I_j u(t_k))
    std::vector<double> mass_source;                   // 2 int(|u|^3 + 2|u|^2) at t_k
    double dt = 0.0;
    bool blew_up = false;
    double blow_up_time = 0.0;
};

/// Evolves u0 and records reports every cfg.diagnostics_every steps (t = 0
/// included). On blow-up the BlowUp error is rethrown after `partial` (if
/// given) receives the trajectory up to the failure.
Trajectory evolve(const Field& u0, const EvolveConfig& cfg, const std::vector<MultiplierSpec>& specs,
                  Trajectory* partial = nullptr);

struct L2Audit {
    // (a) discrete d/dt ||u||^2 versus 2 int(|u|^3 + 2|u|^2): min over interior samples of
    //     rhs + tolerance - lhs; negative means violation.
    double derivative_margin = 0.0;
    double derivative_tolerance = 0.0;
    int derivative_violations = 0;
    // (b) ||u(t)|| <= ||u0|| + sqrt(2 E(u0)) t: min over samples of bound - ||u(t)||.
    double gronwall_margin = 0.0;
    int gronwall_violations = 0;
    // Largest |d/dt ||u||^2| seen; nonzero confirms mass is not conserved.
    double max_mass_rate = 0.0;

    bool passed() const { return derivative_violations == 0 && gronwall_violations == 0; }
};

/// Needs at least three snapshots.
L2Audit l2_growth_audit(const Trajectory& traj);

}  // namespace gpelab
