#include "gpelab/ioperator.hpp"

#include <cmath>
#include <cstdio>

#include "gpelab/errors.hpp"

namespace gpelab {

void validate(const MultiplierSpec& spec) {
    if (!(spec.N >= 1.0)) throw DomainError("multiplier threshold N must be >= 1");
    if (!(spec.s > 0.5 && spec.s < 1.0)) throw DomainError("multiplier regularity s must lie in (1/2, 1)");
}

double multiplier_radial(const MultiplierSpec& spec, double xi_norm) {
    if (std::isinf(spec.N) || xi_norm <= spec.N) return 1.0;
    const double a = 1.0 - spec.s;
    if (xi_norm >= 2.0 * spec.N) return std::pow(spec.N / xi_norm, a);
    const double t = std::log2(xi_norm / spec.N);
    const double sigma = t * t * (3.0 - 2.0 * t);
    return std::pow(spec.N / xi_norm, a * sigma);
}

double multiplier_value(const MultiplierSpec& spec, const Vec3& xi) {
    return multiplier_radial(spec, std::sqrt(xi[0] * xi[0] + xi[1] * xi[1] + xi[2] * xi[2]));
}

Field apply_I(const Field& f, const MultiplierSpec& spec) {
    Field out = to_spectral(f);
    const Grid& g = out.grid();
    for (std::size_t i = 0; i < g.size(); ++i) out[i] *= multiplier_radial(spec, g.frequency_norm(i));
    return out;
}

namespace {
double potential_density(Complex u) {
    const double q = std::norm(u) + 2.0 * u.real();
    return 0.5 * q * q;
}
}  // namespace

EnergyReport energy(const Field& f, double time) {
    const Field c = to_spectral(f);
    const Field p = to_physical(c);
    EnergyReport r;
    r.time = time;
    const double grad = homogeneous_norm(c, 1.0);
    r.kinetic = grad * grad;
    r.potential = integrate(p, &potential_density);
    r.total = r.kinetic + r.potential;
    r.l2 = l2_norm(c);
    return r;
}

EnergyReport modified_energy(const Field& f, const MultiplierSpec& spec, double time) {
    EnergyReport r = energy(apply_I(f, spec), time);
    r.N = spec.N;
    r.s = spec.s;
    return r;
}

GradientINorm gradient_I_norm(const Field& f, const MultiplierSpec& spec) {
    const Field c = to_spectral(f);
    const Grid& g = c.grid();
    double full = 0.0, low = 0.0, high = 0.0;
    for (std::size_t i = 1; i < g.size(); ++i) {
        const double xn = g.frequency_norm(i);
        const double w = std::norm(c[i]);
        const double m = multiplier_radial(spec, xn);
        full += m * m * xn * xn * w;
        if (xn <= spec.N)
            low += xn * xn * w;
        else
            high += std::pow(xn, 2.0 * spec.s) * w;
    }
    return {std::sqrt(full), std::sqrt(low), std::sqrt(high) * std::pow(spec.N, 1.0 - spec.s)};
}

std::string energy_csv_header() { return "time,kinetic,potential,total,l2,N,s"; }

std::string energy_csv_row(const EnergyReport& r) {
    // %.17g round-trips doubles and prints infinity as "inf".
    char buf[256];
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g", r.time, r.kinetic,
                  r.potential, r.total, r.l2, r.N, r.s);
    return buf;
}

}  // namespace gpelab
