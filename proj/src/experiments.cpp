#include "gpelab/experiments.hpp"

#include <algorithm>
#include <cmath>

#include "gpelab/errors.hpp"

namespace gpelab {

AlmostConservationResult almost_conservation_experiment(const Field& u0, double s,
                                                        const std::vector<double>& N_list,
                                                        double window,
                                                        const AlmostConservationOptions& opts) {
    if (!(window > 0.0 && window <= 1.0)) throw DomainError("window must lie in (0, 1]");
    if (N_list.size() < 2) throw DomainError("almost-conservation sweep needs two or more N");

    std::vector<MultiplierSpec> specs;
    for (double N : N_list) specs.push_back({N, s});

    EvolveConfig cfg{u0.grid(), opts.dt, window, opts.diagnostics_every};
    cfg.keep_snapshots = false;
    const Trajectory traj = evolve(u0, cfg, specs);

    AlmostConservationResult out;
    const double e0 = traj.energy.front().total;
    for (const auto& r : traj.energy) out.energy_drift = std::max(out.energy_drift, std::abs(r.total - e0));

    std::vector<double> Ns, incs;
    for (std::size_t j = 0; j < specs.size(); ++j) {
        const auto& reports = traj.modified[j];
        const double m0 = reports.front().total;
        AlmostConservationRow row{};
        row.N = specs[j].N;
        for (const auto& r : reports) row.increment = std::max(row.increment, std::abs(r.total - m0));
        row.increment_window = std::abs(reports.back().total - m0);

        const GradientINorm gi = gradient_I_norm(u0, specs[j]);
        row.gradI_norm = gi.value;
        row.delta = delta_step({specs[j].N, s, gi.value * gi.value});
        const double t_star = std::min(row.delta, window);
        const auto it = std::lower_bound(traj.times.begin(), traj.times.end(), t_star);
        const std::size_t k = std::min<std::size_t>(it - traj.times.begin(), traj.times.size() - 1);
        if (k == 0 || traj.times[k] == t_star) {
            row.increment_delta = std::abs(reports[k].total - m0);
        } else {
            const double w = (t_star - traj.times[k - 1]) / (traj.times[k] - traj.times[k - 1]);
            const double e = (1.0 - w) * reports[k - 1].total + w * reports[k].total;
            row.increment_delta = std::abs(e - m0);
        }
        out.rows.push_back(row);
        Ns.push_back(row.N);
        incs.push_back(std::max(row.increment, 1e-300));
    }
    out.fit = fit_loglog(Ns, incs);
    out.monotone = true;
    for (std::size_t j = 1; j < out.rows.size(); ++j)
        if (!(out.rows[j].increment < out.rows[j - 1].increment)) out.monotone = false;
    return out;
}

GlobalRun iterate_global(const Field& u0, double s, double N, double T, double dt_max) {
    const MultiplierSpec spec{N, s};
    validate(spec);
    if (!(dt_max > 0.0)) throw DomainError("dt_max must be positive");

    GlobalRun run;
    run.trajectory.dt = dt_max;
    run.trajectory.modified.resize(1);

    auto report = [&](const Field& u, double t) {
        const Field p = to_physical(u);
        run.trajectory.times.push_back(t);
        run.trajectory.energy.push_back(energy(p, t));
        run.trajectory.modified[0].push_back(modified_energy(p, spec, t));
        return run.trajectory.modified[0].back().total;
    };

    Field u = to_spectral(u0);
    run.initial_modified_energy = report(u, 0.0);
    {
        const double g0 = gradient_I_norm(u, spec).value;
        if (T < delta_step({N, s, g0 * g0}) * (1.0 - 1e-12))
            throw DomainError("T must be at least the first step-law delta");
    }

    double t = 0.0;
    double e_start = run.initial_modified_energy;
    while (t < T * (1.0 - 1e-14)) {
        const double g = gradient_I_norm(u, spec).value;
        const double delta = delta_step({N, s, g * g});
        const double len = std::min(delta, T - t);
        const int substeps = std::max(1, static_cast<int>(std::ceil(len / dt_max - 1e-9)));
        const double h = len / substeps;
        run.segments.push_back({t, delta, substeps, e_start});
        for (int k = 0; k < substeps; ++k) u = step(u, h, {}, t + k * h);
        t += len;
        e_start = report(u, t);
    }

    const double e0 = run.initial_modified_energy;
    double drift = 0.0;
    for (const auto& r : run.trajectory.modified[0]) drift = std::max(drift, std::abs(r.total - e0));
    run.ratio = e0 > 0.0 ? drift / e0 : 0.0;
    run.flagged = run.ratio >= 2.0;
    if (run.flagged)
        warn("iterate_global: modified-energy drift reached " + std::to_string(run.ratio) +
             " times the initial modified energy");
    return run;
}

}  // namespace gpelab
