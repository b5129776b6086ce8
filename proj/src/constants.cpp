#include "bmhull/constants.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "bmhull/quadrature.hpp"
#include "bmhull/special_functions.hpp"

namespace bmhull {

namespace {
constexpr double kPi = 3.14159265358979323846;

EllValue checked(EllValue v) {
    if (!(v.value > 0.0) || !std::isfinite(v.value))
        throw std::logic_error("ell constant must be positive and finite");
    return v;
}
}

const char* preset_name(OmegaPreset p) {
    switch (p) {
        case OmegaPreset::One: return "one";
        case OmegaPreset::Two: return "two";
        case OmegaPreset::Perp: return "perp";
        case OmegaPreset::Cone: return "cone";
        case OmegaPreset::ThreeQuarters: return "three-quarters";
        case OmegaPreset::Triangle: return "triangle";
        case OmegaPreset::Square: return "square";
        case OmegaPreset::Circle: return "circle";
    }
    return "?";
}

std::optional<OmegaPreset> preset_from_name(const std::string& name) {
    for (OmegaPreset p : kAllPresets)
        if (name == preset_name(p)) return p;
    return std::nullopt;
}

AngleSet preset_angles(OmegaPreset p) {
    switch (p) {
        case OmegaPreset::One: return AngleSet::finite({0.0});
        case OmegaPreset::Two: return AngleSet::finite({0.0, kPi});
        case OmegaPreset::Perp: return AngleSet::finite({0.0, kPi / 2});
        case OmegaPreset::Cone: return AngleSet::finite({0.0, 2 * kPi / 3});
        case OmegaPreset::ThreeQuarters: return AngleSet::finite({0.0, kPi / 2, kPi});
        case OmegaPreset::Triangle: return AngleSet::finite({0.0, 2 * kPi / 3, 4 * kPi / 3});
        case OmegaPreset::Square:
            return AngleSet::finite({0.0, kPi / 2, kPi, 3 * kPi / 2});
        case OmegaPreset::Circle: return AngleSet::full_circle();
    }
    throw std::logic_error("preset_angles: unknown preset");
}

const char* route_name(EllRoute r) {
    switch (r) {
        case EllRoute::closed_form: return "closed_form";
        case EllRoute::quadrature: return "quadrature";
        case EllRoute::lattice_sum: return "lattice_sum";
    }
    return "?";
}

double lattice_I(long long k, long long n) {
    return rect_integral(4.0 * k - 1.0, 4.0 * k + 1.0, 4.0 * n + 1.0, 4.0 * n + 3.0);
}

double series_S0() {
    // Alternating series with a smooth slowly varying term: sum the head
    // directly, then apply repeated averaging of the tail partial sums
    // (Euler transformation) which converges like (head scale)^-k.
    constexpr int kHead = 64;
    constexpr int kLevels = 24;
    auto u = [](int m) {
        const double q = 1.0 / (2.0 * m + 1.0);
        // sqrt(1+q^2)-1 without cancellation for small q
        return q * q / (1.0 + std::sqrt(1.0 + q * q));
    };
    double head = 0.0, comp = 0.0;
    for (int m = 0; m < kHead; ++m) {  // Kahan
        const double x = (m % 2 == 0 ? 1.0 : -1.0) * u(m);
        const double y = x - comp;
        const double t = head + y;
        comp = (t - head) - y;
        head = t;
    }
    // tail: partial sums of the next kLevels terms, then averaging triangle
    std::array<double, kLevels + 1> row{};
    double acc = 0.0;
    for (int j = 0; j <= kLevels; ++j) {
        const int m = kHead + j;
        acc += (m % 2 == 0 ? 1.0 : -1.0) * u(m);
        row[j] = acc;
    }
    for (int lvl = 0; lvl < kLevels; ++lvl)
        for (int j = 0; j < kLevels - lvl; ++j) row[j] = 0.5 * (row[j] + row[j + 1]);
    return 4.0 * (head + row[0]);
}

double series_S1(int box, double* est_abs_error) {
    if (box < 4) throw std::invalid_argument("series_S1: box too small");
    // Direct cells k in [1, K), n in [0, N), then half-strip tails over the
    // centered periods [4K-2, inf) and [4N, inf) plus the quarter corner.
    // The windows [4k-1, 4k+1] / [4n+1, 4n+3] sit centered in their periods,
    // so the midpoint error cancels to O(boundary^-4).
    auto run = [](int K) {
        double s = 0.0, c = 0.0;
        auto add = [&s, &c](double x) {
            const double y = x - c;
            const double t = s + y;
            c = (t - s) - y;
            s = t;
        };
        const double A = 4.0 * K - 2.0;
        const double B = 4.0 * K;
        for (int n = 0; n < K; ++n) {
            const double cc = 4.0 * n + 1.0, dd = 4.0 * n + 3.0;
            for (int k = 1; k < K; ++k) {
                const double aa = 4.0 * k - 1.0, bb = 4.0 * k + 1.0;
                add(g_fn(aa, dd) + g_fn(bb, cc) - g_fn(aa, cc) - g_fn(bb, dd));
            }
            add(0.5 * (g_fn(A, dd) - g_fn(A, cc) + 1.0 / cc - 1.0 / dd));
        }
        for (int k = 1; k < K; ++k) {
            const double aa = 4.0 * k - 1.0, bb = 4.0 * k + 1.0;
            add(0.5 * (1.0 / aa + g_fn(bb, B) - g_fn(aa, B) - 1.0 / bb));
        }
        add(0.25 * (1.0 / A + 1.0 / B - g_fn(A, B)));
        return 4.0 * s;
    };
    const double full = run(box);
    if (est_abs_error) {
        const double coarse = run(box / 2);
        *est_abs_error = std::abs(full - coarse) + 1e-12;
    }
    return full;
}

double series_S1() { return series_S1(400, nullptr); }

double disk_area_constant() {
    // int_0^inf ds / I0(sqrt(2s)) = int_0^inf lambda dlambda / I0(lambda)
    auto f = [](double lam) { return lam / bessel_i0(lam); };
    return integrate(f, 0.0, 64.0, 1e-10, 1e-12).value;
}

EllValue analytic_ell(OmegaPreset preset) {
    switch (preset) {
        case OmegaPreset::One: return checked({1.0, EllRoute::closed_form, 0.0});
        case OmegaPreset::Two: return checked({kPi / 2.0, EllRoute::closed_form, 0.0});
        case OmegaPreset::Perp: return checked({std::sqrt(2.0), EllRoute::closed_form, 0.0});
        case OmegaPreset::Cone: return checked({1.5, EllRoute::closed_form, 0.0});
        case OmegaPreset::Triangle:
            return checked({kPi / std::sqrt(3.0), EllRoute::closed_form, 0.0});
        case OmegaPreset::ThreeQuarters:
            // 1 + S0/2: the One constant plus the corrected half-lattice
            // cross term (pi/2 + 1 - (pi/2 - S0/2)).
            return checked({1.0 + 0.5 * series_S0(), EllRoute::lattice_sum, 1e-12});
        case OmegaPreset::Square: {
            double est = 0.0;
            const double s1 = series_S1(400, &est);
            return checked({series_S0() + s1, EllRoute::lattice_sum, est + 1e-12});
        }
        case OmegaPreset::Circle: {
            auto f = [](double lam) { return 1.0 / bessel_i0(lam); };
            const QuadResult q = integrate(f, 0.0, 64.0, 1e-10, 1e-12);
            return checked({q.value, EllRoute::quadrature, std::max(q.error, 1e-10)});
        }
    }
    throw std::logic_error("analytic_ell: unknown preset");
}

EllValue ell_via_laplace(const ExitLaw& law) {
    if (law.kind == ExitLaw::Kind::Cone60)
        throw std::domain_error("ell_via_laplace: no Laplace transform for Cone60");
    auto f = [&law](double lam) { return laplace_transform(law, lam); };
    const QuadResult q = integrate_to_infinity(f, 0.0, 1e-10, 1e-12);
    return checked({q.value, EllRoute::quadrature, std::max(q.error, 1e-8)});
}

}  // namespace bmhull
