#pragma once

namespace bmhull {

// Exit-time laws of planar Brownian motion from the tangent bodies, plus the
// Bessel(3) hitting time they match in law.
struct ExitLaw {
    enum class Kind {
        HalfPlane,       // first hit of level 1 by linear BM
        Strip,           // exit of [-1, 1] by linear BM
        Cone60,          // exit of the 60-degree cone tangent to the unit circle
        TriangleUnit,    // exit of the side-1 equilateral triangle from its center
        TrianglePOmega,  // exit of the tangent triangle with side 2*sqrt(3)
        Bessel3,         // first hit of 3a from a by a Bessel(3) process
        Disk,            // exit of the unit disk from the center
    };

    Kind kind = Kind::HalfPlane;
    double a = 0.0;  // Bessel3 start level

    static ExitLaw half_plane() { return {Kind::HalfPlane, 0.0}; }
    static ExitLaw strip() { return {Kind::Strip, 0.0}; }
    static ExitLaw cone60() { return {Kind::Cone60, 0.0}; }
    static ExitLaw triangle_unit() { return {Kind::TriangleUnit, 0.0}; }
    static ExitLaw triangle_p_omega() { return {Kind::TrianglePOmega, 0.0}; }
    static ExitLaw bessel3(double a);
    static ExitLaw disk() { return {Kind::Disk, 0.0}; }
};

// TriangleUnit equals Bessel3 with this start level in law.
inline constexpr double kTriangleBesselLevel = 0.14433756729740643;  // 1/(4 sqrt 3)

// E[exp(-lambda^2 T / 2)]. Exactly 1 at lambda = 0. Unsupported for Cone60.
double laplace_transform(const ExitLaw& law, double lambda);

// P(T > t), t > 0. Unsupported for Disk (no convergent series available
// without Bessel zeros).
double survival(const ExitLaw& law, double t);

// Density of T at t > 0. Supported for HalfPlane, Strip, TriangleUnit,
// TrianglePOmega, Bessel3.
double density(const ExitLaw& law, double t);

// E[T^{-1/2}], via the Laplace-transform integral when available and the
// survival route for Cone60. Adaptive quadrature, absolute error <= 1e-9.
double inv_sqrt_moment(const ExitLaw& law);

// E[T^s] for TriangleUnit, s > -1/2, in closed form through Gamma and the
// chi3 L-function. Normalized so that s = 0 gives exactly 1.
double mellin_triangle(double s);

// The two series representations of the Bessel3 law (theta functional
// equation partners), exposed for cross-validation. Either converges
// everywhere; the Gaussian form is fast for small t, the exponential form
// for large t.
double bessel3_density_gauss(double a, double t);
double bessel3_density_exp(double a, double t);
double bessel3_survival_gauss(double a, double t);
double bessel3_survival_exp(double a, double t);

}  // namespace bmhull
