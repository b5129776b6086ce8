#pragma once

#include <optional>
#include <string>

#include "bmhull/exit_laws.hpp"
#include "bmhull/geometry.hpp"

namespace bmhull {

// The eight rotation sets with known mean-perimeter constants.
enum class OmegaPreset {
    One,            // {0}
    Two,            // {0, pi}
    Perp,           // {0, pi/2}
    Cone,           // {0, 2pi/3}
    ThreeQuarters,  // {0, pi/2, pi}
    Triangle,       // {0, 2pi/3, 4pi/3}
    Square,         // {0, pi/2, pi, 3pi/2}
    Circle,         // [0, 2pi)
};

inline constexpr OmegaPreset kAllPresets[] = {
    OmegaPreset::One,      OmegaPreset::Two,           OmegaPreset::Perp,
    OmegaPreset::Cone,     OmegaPreset::ThreeQuarters, OmegaPreset::Triangle,
    OmegaPreset::Square,   OmegaPreset::Circle,
};

const char* preset_name(OmegaPreset p);
std::optional<OmegaPreset> preset_from_name(const std::string& name);
AngleSet preset_angles(OmegaPreset p);

enum class EllRoute { closed_form, quadrature, lattice_sum };
const char* route_name(EllRoute r);

// A mean-perimeter constant: E[L(C_Omega(t))] = value * sqrt(8 pi t).
struct EllValue {
    double value = 0.0;
    EllRoute route = EllRoute::closed_form;
    double est_abs_error = 0.0;
};

// The constant for each preset: closed forms where they exist, the lattice
// sums for ThreeQuarters/Square, quadrature of 1/I0 for the circle.
EllValue analytic_ell(OmegaPreset preset);

// Independent route: ell = integral over lambda of the exit-law Laplace
// transform. Unsupported for Cone60.
EllValue ell_via_laplace(const ExitLaw& law);

// Lattice cell integral I(k, n) over [4k-1, 4k+1] x [4n+1, 4n+3].
double lattice_I(long long k, long long n);

// S0 = 4 sum (-1)^m u_m, u_m = sqrt(1 + 1/(2m+1)^2) - 1; tail-averaged Euler
// acceleration, absolute error <= 1e-12.
double series_S0();

// S1 = 4 sum_{n>=0, k>=1} I(k, n), truncated box plus half-strip/corner tail
// corrections in closed form.
double series_S1();
double series_S1(int box, double* est_abs_error);

// E[A(smallest centered disk covering the path hull at t=1)] / pi =
// integral of ds / I0(sqrt(2s)).
double disk_area_constant();

// Mean area of the convex hull of a unit-time planar Brownian path (exact,
// documented value; not computed here).
inline constexpr double kPathHullMeanArea = 1.5707963267948966;  // pi/2

}  // namespace bmhull
