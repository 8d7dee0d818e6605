#include "gpelab/dynamics.hpp"

#include <algorithm>
#include <cmath>

#include "gpelab/data.hpp"
#include "gpelab/errors.hpp"

namespace gpelab {

Field dealias(const Field& f) {
    Field c = to_spectral(f);
    const Grid& g = c.grid();
    for (std::size_t i = 0; i < g.size(); ++i)
        if (!in_dealiased_band(g, i)) c[i] = Complex{0.0, 0.0};
    return c;
}

Field nonlinearity(const Field& f, bool dealias_output) {
    if (!f.is_physical()) throw ContractViolation("nonlinearity expects a Physical field");
    Field out(f.grid(), Representation::Physical);
    for (std::size_t i = 0; i < f.size(); ++i) {
        const Complex u = f[i];
        out[i] = (1.0 + u) * (std::norm(u) + 2.0 * u.real());
    }
    return dealias_output ? to_physical(dealias(out)) : out;
}

Field linear_propagate(const Field& f, double t) {
    Field c = to_spectral(f);
    const Grid& g = c.grid();
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double xn = g.frequency_norm(i);
        c[i] *= std::polar(1.0, xn * xn * t);
    }
    return c;
}

namespace {

// u_t = i F(u) advanced by one classical RK4 step in physical space.
Field nonlinear_substep(const Field& u, double dt, bool dealias_output) {
    const Complex idt{0.0, dt};
    auto rhs = [&](const Field& v) { return idt * nonlinearity(v, dealias_output); };
    const Field k1 = rhs(u);
    const Field k2 = rhs(u + Complex{0.5} * k1);
    const Field k3 = rhs(u + Complex{0.5} * k2);
    const Field k4 = rhs(u + k3);
    Field out = u;
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] += (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]) / 6.0;
    return out;
}

bool all_finite(const Field& f) {
    for (const auto& v : f.values())
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

}  // namespace

Field step(const Field& f, double dt, const StepOptions& opts, double time) {
    if (!(dt > 0.0)) throw DomainError("step needs dt > 0");
    Field c = linear_propagate(f, 0.5 * dt);
    if (opts.nonlinearity_enabled) {
        Field p = to_physical(c);
        p = nonlinear_substep(p, dt, opts.dealias);
        c = to_spectral(p);
        if (opts.dealias) c = dealias(c);
    }
    c = linear_propagate(c, 0.5 * dt);
    if (!all_finite(c)) throw BlowUp(time + dt, "non-finite field after step at t = " + std::to_string(time + dt));
    return c;
}

int EvolveConfig::step_count() const { return static_cast<int>(std::llround(t_end / dt)); }

void EvolveConfig::validate() const {
    if (!(dt > 0.0) || !(t_end > 0.0)) throw DomainError("dt and t_end must be positive");
    if (dt > t_end) throw DomainError("dt must not exceed t_end");
    const int steps = step_count();
    if (std::abs(steps * dt - t_end) > 1e-9 * t_end) throw DomainError("t_end must be a multiple of dt");
    if (diagnostics_every < 1 || steps % diagnostics_every != 0)
        throw DomainError("diagnostics cadence must divide the step count");
}

namespace {

double mass_source_density(Complex u) {
    const double a = std::abs(u);
    return a * a * a + 2.0 * a * a;
}

void record(Trajectory& traj, const Field& u, double t, bool keep,
            const std::vector<MultiplierSpec>& specs) {
    const Field p = to_physical(u);
    traj.times.push_back(t);
    if (keep) traj.snapshots.push_back(p);
    traj.energy.push_back(energy(p, t));
    for (std::size_t j = 0; j < specs.size(); ++j) traj.modified[j].push_back(modified_energy(p, specs[j], t));
    traj.mass_source.push_back(2.0 * integrate(p, &mass_source_density));
}

}  // namespace

Trajectory evolve(const Field& u0, const EvolveConfig& cfg, const std::vector<MultiplierSpec>& specs,
                  Trajectory* partial) {
    cfg.validate();
    if (!(u0.grid() == cfg.grid)) throw ContractViolation("initial datum is not on the configured grid");
    for (const auto& sp : specs) validate(sp);

    Trajectory traj;
    traj.dt = cfg.dt;
    traj.modified.resize(specs.size());
    const StepOptions opts{cfg.dealias, cfg.nonlinearity_enabled};
    record(traj, u0, 0.0, cfg.keep_snapshots, specs);

    Field u = to_spectral(u0);
    const int steps = cfg.step_count();
    for (int k = 1; k <= steps; ++k) {
        const double t_prev = (k - 1) * cfg.dt;
        try {
            u = step(u, cfg.dt, opts, t_prev);
        } catch (const BlowUp& e) {
            traj.blew_up = true;
            traj.blow_up_time = e.time();
            if (partial) *partial = std::move(traj);
            throw;
        }
        if (k % cfg.diagnostics_every == 0) record(traj, u, k * cfg.dt, cfg.keep_snapshots, specs);
    }
    if (partial) *partial = traj;
    return traj;
}

L2Audit l2_growth_audit(const Trajectory& traj) {
    const std::size_t m = traj.times.size();
    if (m < 3) throw DomainError("l2_growth_audit needs at least three samples");
    L2Audit a;

    double scale = 0.0;
    for (std::size_t k = 0; k < m; ++k) scale = std::max(scale, traj.mass_source[k]);
    a.derivative_tolerance = 10.0 * traj.dt * scale;
    a.derivative_margin = kInfinity;
    for (std::size_t k = 1; k + 1 < m; ++k) {
        const double lo = traj.energy[k - 1].l2, hi = traj.energy[k + 1].l2;
        const double rate = (hi * hi - lo * lo) / (traj.times[k + 1] - traj.times[k - 1]);
        a.max_mass_rate = std::max(a.max_mass_rate, std::abs(rate));
        const double margin = traj.mass_source[k] + a.derivative_tolerance - rate;
        a.derivative_margin = std::min(a.derivative_margin, margin);
        if (margin < 0.0) ++a.derivative_violations;
    }

    const double m0 = traj.energy[0].l2;
    const double growth = std::sqrt(2.0 * traj.energy[0].total);
    a.gronwall_margin = kInfinity;
    // k = 0 holds with equality; the margin is reported over t > 0.
    for (std::size_t k = 1; k < m; ++k) {
        const double margin = m0 + growth * traj.times[k] - traj.energy[k].l2;
        a.gronwall_margin = std::min(a.gronwall_margin, margin);
        // Time-discretization allowance 10 dt^2 on top of the closed bound.
        if (margin < -10.0 * traj.dt * traj.dt) ++a.gronwall_violations;
    }
    return a;
}

}  // namespace gpelab
