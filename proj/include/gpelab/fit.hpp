#pragma once

#include <span>

namespace gpelab {

/// Least-squares line through (log x, log y).
struct ExponentFit {
    double slope = 0.0;
    double intercept = 0.0;
    double residual = 0.0;  // rms of log-deviations
};

/// Needs at least two points, all positive.
ExponentFit fit_loglog(std::span<const double> x, std::span<const double> y);

}  // namespace gpelab
