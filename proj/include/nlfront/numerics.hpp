#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace nlfront {

struct MinimizeResult {
    double x = 0.0;
    double value = 0.0;
    bool at_lower_edge = false;  // infimum pushed against the search boundary
    bool at_upper_edge = false;
};

/// Golden-section refinement of a bracketed scalar minimum.
MinimizeResult golden_section_minimize(const std::function<double(double)>& f, double a,
                                       double b, double rel_tol = 1e-10,
                                       int max_iter = 200);

/// Coarse log-spaced grid scan followed by golden-section refinement around the
/// best grid point. Points where f returns +infinity are skipped; if every
/// point is infinite the result value is +infinity.
MinimizeResult minimize_log_grid(const std::function<double(double)>& f, double lo, double hi,
                                 int grid_points, double rel_tol = 1e-8);

/// Adaptive Simpson quadrature on [a, b].
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double rel_tol = 1e-10, int max_depth = 40);

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double slope_stderr = 0.0;
    double residual_max = 0.0;
    std::size_t n = 0;
};

/// Ordinary least squares y = intercept + slope * x.
LineFit fit_line(std::span<const double> x, std::span<const double> y);

/// Classical RK4 for a scalar ODE u' = f(u), fixed step with a shortened
/// final step so the integration lands exactly on t = T.
double rk4_scalar(const std::function<double(double)>& f, double u0, double T, double dt);

}  // namespace nlfront
