#include "bmhull/exit_laws.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "bmhull/quadrature.hpp"
#include "bmhull/special_functions.hpp"

namespace bmhull {

namespace {
constexpr double kPi = 3.14159265358979323846;

double clamp01(double v) { return std::min(1.0, std::max(0.0, v)); }

// 3 sinh(x) / sinh(3x), overflow-safe and accurate down to x = 0.
double sinh_ratio3(double x) {
    if (x == 0.0) return 1.0;
    return 3.0 * std::exp(-2.0 * x) * (-std::expm1(-2.0 * x)) / (-std::expm1(-6.0 * x));
}

struct CompensatedSum {
    double s = 0.0, c = 0.0;
    void add(double x) {
        const double y = x - c;
        const double t = s + y;
        c = (t - s) - y;
        s = t;
    }
};

// shared truncation cap; the representation in use must converge before it
constexpr Tolerance kSeries{};

[[noreturn]] void series_diverged(const char* what) {
    throw std::runtime_error(std::string(what) +
                             ": series did not converge within max_terms");
}

// exponential-kernel theta series of the triangle exit law, rate 8 pi^2 / 3
double triangle_survival_theta(double t) {
    const double e = 8.0 * kPi * kPi / 3.0 * t;
    CompensatedSum sum;
    for (long long n = 1;; ++n) {
        if (n > kSeries.max_terms) series_diverged("triangle_survival_theta");
        const double w = std::exp(-e * n * n);
        if (w < 1e-18) break;
        sum.add(chi3(n) * w / static_cast<double>(n));
    }
    return clamp01(3.0 * std::sqrt(3.0) / kPi * sum.s);
}

double triangle_density_theta(double t) {
    const double e = 8.0 * kPi * kPi / 3.0 * t;
    CompensatedSum sum;
    for (long long n = 1;; ++n) {
        if (n > kSeries.max_terms) series_diverged("triangle_density_theta");
        const double w = std::exp(-e * n * n);
        if (w < 1e-18) break;
        sum.add(chi3(n) * static_cast<double>(n) * w);
    }
    return std::max(0.0, 8.0 * std::sqrt(3.0) * kPi * sum.s);
}

double strip_density_theta(double t) {
    CompensatedSum sum;
    for (long long n = 0;; ++n) {
        if (n > kSeries.max_terms) series_diverged("strip_density_theta");
        const double np = n + 0.5;
        const double w = np * std::exp(-np * np * kPi * kPi * t / 2.0);
        if (w < 1e-18 && n > 0) break;
        sum.add((n % 2 == 0) ? w : -w);
    }
    return std::max(0.0, kPi * sum.s);
}

// image expansion of the strip exit density, partner of the theta form
double strip_density_gauss(double t) {
    const double pref = 2.0 / std::sqrt(2.0 * kPi * t * t * t);
    CompensatedSum sum;
    for (long long j = 0;; ++j) {
        if (j > kSeries.max_terms) series_diverged("strip_density_gauss");
        const double m = 2.0 * j + 1.0;
        const double w = m * std::exp(-m * m / (2.0 * t));
        if (w < 1e-300) break;
        sum.add((j % 2 == 0) ? w : -w);
    }
    return std::max(0.0, pref * sum.s);
}

// branch crossovers: both partner series converge comfortably at these points
constexpr double kStripDensityCross = 0.5;
double bessel3_cross(double a) { return 6.0 * a * a / kPi; }

void require_bessel3(double a) {
    if (!(a > 0.0)) throw std::domain_error("bessel3: level parameter must be positive");
}
}  // namespace

ExitLaw ExitLaw::bessel3(double a) {
    require_bessel3(a);
    return {Kind::Bessel3, a};
}

double bessel3_density_gauss(double a, double t) {
    require_bessel3(a);
    if (!(t > 0.0)) throw std::domain_error("density: t must be positive");
    const double pref = 6.0 * a / std::sqrt(2.0 * kPi * t * t * t);
    CompensatedSum sum;
    for (long long n = 1;; ++n) {
        if (n > kSeries.max_terms) series_diverged("bessel3_density_gauss");
        const double w = static_cast<double>(n) * std::exp(-2.0 * n * n * a * a / t);
        if (w < 1e-300) break;
        sum.add(chi3(n) * w);
    }
    return std::max(0.0, pref * sum.s);
}

double bessel3_density_exp(double a, double t) {
    require_bessel3(a);
    if (!(t > 0.0)) throw std::domain_error("density: t must be positive");
    const double rate = kPi * kPi / (18.0 * a * a);
    const double pref = 3.0 * std::sqrt(3.0) * kPi / (18.0 * a * a);
    CompensatedSum sum;
    for (long long n = 1;; ++n) {
        if (n > kSeries.max_terms) series_diverged("bessel3_density_exp");
        const double w = static_cast<double>(n) * std::exp(-rate * n * n * t);
        if (w < 1e-18) break;
        sum.add(chi3(n) * w);
    }
    return std::max(0.0, pref * sum.s);
}

double bessel3_survival_gauss(double a, double t) {
    require_bessel3(a);
    if (!(t > 0.0)) throw std::domain_error("survival: t must be positive");
    const double c = a * std::sqrt(2.0 / t);
    CompensatedSum sum;
    for (long long n = 1;; ++n) {
        if (n > kSeries.max_terms) series_diverged("bessel3_survival_gauss");
        const double x = c * n;
        if (x > 9.5) break;
        sum.add(chi3(n) * std::erfc(x));
    }
    return clamp01(1.0 - 3.0 * sum.s);
}

double bessel3_survival_exp(double a, double t) {
    require_bessel3(a);
    if (!(t > 0.0)) throw std::domain_error("survival: t must be positive");
    const double rate = kPi * kPi / (18.0 * a * a);
    CompensatedSum sum;
    for (long long n = 1;; ++n) {
        if (n > kSeries.max_terms) series_diverged("bessel3_survival_exp");
        const double w = std::exp(-rate * n * n * t);
        if (w < 1e-18) break;
        sum.add(chi3(n) * w / static_cast<double>(n));
    }
    return clamp01(3.0 * std::sqrt(3.0) / kPi * sum.s);
}

double laplace_transform(const ExitLaw& law, double lambda) {
    if (!(lambda >= 0.0)) throw std::domain_error("laplace_transform: lambda must be >= 0");
    switch (law.kind) {
        case ExitLaw::Kind::HalfPlane:
            return std::exp(-lambda);
        case ExitLaw::Kind::Strip:
            return 1.0 / std::cosh(lambda);
        case ExitLaw::Kind::Disk:
            if (lambda > 700.0) return 0.0;
            return 1.0 / bessel_i0(lambda);
        case ExitLaw::Kind::Bessel3:
            return sinh_ratio3(lambda * law.a);
        case ExitLaw::Kind::TriangleUnit:
            return sinh_ratio3(lambda * kTriangleBesselLevel);
        case ExitLaw::Kind::TrianglePOmega:
            return sinh_ratio3(lambda * 0.5);
        case ExitLaw::Kind::Cone60:
            throw std::domain_error("laplace_transform: no closed form for Cone60");
    }
    throw std::logic_error("laplace_transform: unknown law");
}

double survival(const ExitLaw& law, double t) {
    if (!(t > 0.0)) throw std::domain_error("survival: t must be positive");
    switch (law.kind) {
        case ExitLaw::Kind::HalfPlane:
            return std::erf(1.0 / std::sqrt(2.0 * t));
        case ExitLaw::Kind::Strip:
            return max_abs_cdf(1.0 / std::sqrt(t));
        case ExitLaw::Kind::Cone60: {
            const double rt = std::sqrt(t);
            return clamp01(4.0 * normal_cdf(1.0 / rt) - 2.0 * normal_cdf(2.0 / rt) - 1.0);
        }
        case ExitLaw::Kind::TriangleUnit: {
            const double a = kTriangleBesselLevel;
            return t < bessel3_cross(a) ? bessel3_survival_gauss(a, t)
                                        : triangle_survival_theta(t);
        }
        case ExitLaw::Kind::TrianglePOmega:
            return survival(ExitLaw::triangle_unit(), t / 12.0);
        case ExitLaw::Kind::Bessel3:
            return t < bessel3_cross(law.a) ? bessel3_survival_gauss(law.a, t)
                                            : bessel3_survival_exp(law.a, t);
        case ExitLaw::Kind::Disk:
            throw std::domain_error("survival: not available for Disk");
    }
    throw std::logic_error("survival: unknown law");
}

double density(const ExitLaw& law, double t) {
    if (!(t > 0.0)) throw std::domain_error("density: t must be positive");
    switch (law.kind) {
        case ExitLaw::Kind::HalfPlane:
            return std::exp(-0.5 / t) / std::sqrt(2.0 * kPi * t * t * t);
        case ExitLaw::Kind::Strip:
            return t < kStripDensityCross ? strip_density_gauss(t) : strip_density_theta(t);
        case ExitLaw::Kind::TriangleUnit: {
            const double a = kTriangleBesselLevel;
            return t < bessel3_cross(a) ? bessel3_density_gauss(a, t)
                                        : triangle_density_theta(t);
        }
        case ExitLaw::Kind::TrianglePOmega:
            return density(ExitLaw::triangle_unit(), t / 12.0) / 12.0;
        case ExitLaw::Kind::Bessel3:
            return t < bessel3_cross(law.a) ? bessel3_density_gauss(law.a, t)
                                            : bessel3_density_exp(law.a, t);
        case ExitLaw::Kind::Cone60:
            throw std::domain_error("density: not available for Cone60");
        case ExitLaw::Kind::Disk:
            throw std::domain_error("density: not available for Disk");
    }
    throw std::logic_error("density: unknown law");
}

double inv_sqrt_moment(const ExitLaw& law) {
    if (law.kind == ExitLaw::Kind::Cone60) {
        // E[T^{-1/2}] = int_0^inf (1 - S(x^{-2})) dx, a smooth rapidly
        // decaying integrand (substitution x = t^{-1/2} in the CDF integral)
        auto f = [](double x) {
            return 2.0 * (1.0 - 2.0 * normal_cdf(x) + normal_cdf(2.0 * x));
        };
        return integrate(f, 0.0, 12.0, 1e-12, 1e-12).value;
    }
    auto f = [&law](double lam) { return laplace_transform(law, lam); };
    return std::sqrt(2.0 / kPi) * integrate_to_infinity(f, 0.0, 1e-11, 1e-12).value;
}

double mellin_triangle(double s) {
    if (!(s > -0.5)) throw std::domain_error("mellin_triangle: need s > -1/2");
    return std::pow(3.0, s + 1.5) * std::pow(8.0, -s) * std::pow(kPi, -2.0 * s - 1.0) *
           gamma_real(s + 1.0) * dirichlet_l_chi3(2.0 * s + 1.0);
}

}  // namespace bmhull
