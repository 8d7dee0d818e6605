#pragma once

#include "gpelab/ledger.hpp"

namespace gpelab {

struct StepLawInput {
    double N;  // >= 1
    double s;  // in (1/2, 1)
    double g;  // ||grad I u0||^2 >= 0
};

/// delta = min(1, d1, d2, d3) with d1 = (N^{2(1-s)}/g)^{1/(s-1/2)},
/// d2 = (N^{1-s}/g)^{2/s}, d3 = g^{-2}; g = 0 gives 1.
double delta_step(const StepLawInput& in);

/// The three terms delta^{s-1/2}/N^{2(1-s)}, delta^{s/2}/N^{1-s}, delta^{1/2}, each times g.
struct StepLawTerms {
    double t1, t2, t3;
};
StepLawTerms step_law_terms(const StepLawInput& in, double delta);

/// Exact version on the exponent scale: with N free and g = N^{g_exp}, returns
/// the exponent e such that delta_step = N^e for every N >= 1.
Rational delta_exponent(const Rational& s, const Rational& g_exp);

}  // namespace gpelab
