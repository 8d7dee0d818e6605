#include "gpelab/step_law.hpp"

#include <algorithm>
#include <cmath>

#include "gpelab/errors.hpp"

namespace gpelab {

namespace {
void check(const StepLawInput& in) {
    if (!(in.s > 0.5)) throw DomainError("step law needs s > 1/2");
    if (!(in.s < 1.0)) throw DomainError("step law needs s < 1");
    if (!(in.N >= 1.0) || !std::isfinite(in.N)) throw DomainError("step law needs finite N >= 1");
    if (!(in.g >= 0.0) || !std::isfinite(in.g)) throw DomainError("step law needs finite g >= 0");
}
}  // namespace

double delta_step(const StepLawInput& in) {
    check(in);
    if (in.g == 0.0) return 1.0;
    const double a = 1.0 - in.s;
    // Work in logs so that large N or g do not overflow the intermediate powers.
    const double lN = std::log(in.N), lg = std::log(in.g);
    const double l1 = (2.0 * a * lN - lg) / (in.s - 0.5);
    const double l2 = (a * lN - lg) * 2.0 / in.s;
    const double l3 = -2.0 * lg;
    return std::exp(std::min({0.0, l1, l2, l3}));
}

StepLawTerms step_law_terms(const StepLawInput& in, double delta) {
    check(in);
    const double a = 1.0 - in.s;
    return {in.g * std::pow(delta, in.s - 0.5) / std::pow(in.N, 2.0 * a),
            in.g * std::pow(delta, 0.5 * in.s) / std::pow(in.N, a), in.g * std::sqrt(delta)};
}

Rational delta_exponent(const Rational& s, const Rational& g_exp) {
    if (!(s > Rational(1, 2) && s < Rational(1))) throw DomainError("step law needs s in (1/2, 1)");
    const Rational a = Rational(1) - s;
    const Rational e1 = (2 * a - g_exp) / (s - Rational(1, 2));
    const Rational e2 = 2 * (a - g_exp) / s;
    const Rational e3 = -2 * g_exp;
    return std::min({Rational(0), e1, e2, e3});
}

}  // namespace gpelab
