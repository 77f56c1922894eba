#pragma once

#include <string>
#include <utility>
#include <vector>

namespace olab {

struct RateFit {
    double slope = 0.0;
    /// Two standard errors of the slope, from the fit residuals.
    double half_width = 0.0;
    int points_used = 0;
    /// Pairs dropped because the error was at or below the floor.
    int points_excluded = 0;
    std::string note;
};

/// Least-squares slope of log(error) against log(parameter).
/// Throws std::invalid_argument with fewer than 3 usable pairs or a nonpositive parameter.
RateFit fit_rate(const std::vector<std::pair<double, double>>& pairs, double floor = 0.0);

}  // namespace olab
