#pragma once
//
// The smoothing multiplier m_N, the operator I_N and the energy functionals
//
//     E(w) = int |grad w|^2 + 1/2 int (|w|^2 + 2 Re w)^2.
//
#include <iosfwd>
#include <string>
#include <vector>

#include "gpelab/spectral.hpp"

namespace gpelab {

struct MultiplierSpec {
    double N;  // >= 1
    double s;  // in (1/2, 1)
};

void validate(const MultiplierSpec& spec);

/// m_N as a function of |xi|. On (N, 2N) the join is (N/|xi|)^{(1-s) sigma(t)},
/// t = log2(|xi|/N), sigma(t) = 3t^2 - 2t^3.
double multiplier_radial(const MultiplierSpec& spec, double xi_norm);
double multiplier_value(const MultiplierSpec& spec, const Vec3& xi);

Field apply_I(const Field& f, const MultiplierSpec& spec);

struct EnergyReport {
    double time = 0.0;
    double kinetic = 0.0;
    double potential = 0.0;
    double total = 0.0;
    double l2 = 0.0;
    // Multiplier the report was taken through; plain energy uses N = inf, s = 1.
    double N = kInfinity;
    double s = 1.0;
};

EnergyReport energy(const Field& f, double time = 0.0);
EnergyReport modified_energy(const Field& f, const MultiplierSpec& spec, double time = 0.0);

struct GradientINorm {
    double value;       // ||grad I u||
    double low_piece;   // || |xi| u^ ||_{|xi| <= N}
    double high_piece;  // || |xi|^s u^ ||_{|xi| > N} * N^{1-s}
    double comparator() const { return low_piece + high_piece; }
};

GradientINorm gradient_I_norm(const Field& f, const MultiplierSpec& spec);

std::string energy_csv_header();
std::string energy_csv_row(const EnergyReport& r);

}  // namespace gpelab
