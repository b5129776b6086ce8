#pragma once

#include <cstdint>

namespace bmhull {

// Truncation control for the series evaluators.
struct Tolerance {
    double abs_tol = 1e-14;
    double rel_tol = 1e-14;
    int max_terms = 1000000;
};

// Modified Bessel function I0(x) for 0 <= x <= 700.
// Power series below x = 15, large-argument asymptotic expansion above;
// relative error <= 1e-12 on the whole range.
double bessel_i0(double x);

// Standard normal CDF (absolute error ~1e-15) and H(z) = 2*Phi(z) - 1.
double normal_cdf(double z);
double h_fn(double z);

// Distribution function L(z) = P(max_{0<=s<=1} |W(s)| <= z) of the maximum
// absolute value of a standard linear Brownian motion. Two convergent
// representations are exposed for cross-checking; max_abs_cdf picks the
// branch that converges fast at the given z.
double max_abs_cdf(double z);
double max_abs_cdf_theta(double z);  // theta series, fast for small z
double max_abs_cdf_gauss(double z);  // Gaussian-window series, fast for large z

// Dirichlet character mod 3: 1, -1, 0 for n = 1, 2, 0 (mod 3).
int chi3(long long n);

// L-function of chi3, sum chi3(n) n^-s for s > 0. Period-3 block summation
// with an Euler-Maclaurin tail.
double dirichlet_l_chi3(double s);

// Gamma(s) for s > 0, relative error <= 1e-10.
double gamma_real(double s);

// g(x,y) = sqrt(x^2+y^2)/(x*y), the mixed antiderivative (negated) of
// (u^2+v^2)^{-3/2}. Both arguments nonzero.
double g_fn(double x, double y);

// Integral of (u^2+v^2)^{-3/2} over [a,b] x [c,d], evaluated in closed form
// from g. Endpoints may be +/- infinity; rectangles meeting a coordinate axis
// are split at zero and use the one-sided limit forms. Throws if the closed
// rectangle contains the origin (the integral diverges there).
double rect_integral(double a, double b, double c, double d);

}  // namespace bmhull
