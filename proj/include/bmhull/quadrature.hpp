#pragma once

#include <functional>

namespace bmhull {

struct QuadResult {
    double value = 0.0;
    double error = 0.0;  // conservative absolute error estimate
};

// Adaptive Gauss-Kronrod 7/15 quadrature on [a, b].
// Splits the worst interval until the summed error estimate drops below
// max(abs_tol, rel_tol * |value|) or max_intervals is reached.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double abs_tol = 1e-12, double rel_tol = 1e-12,
                     int max_intervals = 4000);

// Integral over [a, inf) of a rapidly decaying integrand. The finite cutoff is
// found by doubling until the integrand falls below tail_eps relative to the
// magnitude seen near a.
QuadResult integrate_to_infinity(const std::function<double(double)>& f, double a,
                                 double abs_tol = 1e-12, double rel_tol = 1e-12,
                                 double tail_eps = 1e-16);

}  // namespace bmhull
