#pragma once

#include <vector>

namespace chiralq {

/// Least-squares line through (log x, log y).
struct PowerFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r2 = 0.0; ///< coefficient of determination; 1 for two points
};

/// Throws DomainError for fewer than two points, mismatched sizes or
/// nonpositive values.
PowerFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y);

/// Convergence order of errors measured at steps h: the fitted slope.
inline double observed_order(const std::vector<double>& h, const std::vector<double>& err) {
    return fit_loglog(h, err).slope;
}

} // namespace chiralq
