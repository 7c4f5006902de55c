#pragma once

#include <span>

namespace cvtfrac {

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    /// 1 - SS_res / SS_tot; 1 when the responses are constant and fit exactly.
    double r_squared = 0.0;
};

/// Unweighted ordinary least squares of y on x. Throws InsufficientScales
/// when x has fewer than two distinct values.
LinearFit fit_line(std::span<const double> x, std::span<const double> y);

}  // namespace cvtfrac
