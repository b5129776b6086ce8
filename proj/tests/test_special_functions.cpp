#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "bmhull/quadrature.hpp"
#include "bmhull/special_functions.hpp"

using namespace bmhull;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = 3.14159265358979323846;

// independent oracle: ascending series in extended precision
long double i0_series_ld(long double x, int terms) {
    const long double q = 0.25L * x * x;
    long double sum = 1.0L, term = 1.0L;
    for (int k = 1; k <= terms; ++k) {
        term *= q / (static_cast<long double>(k) * k);
        sum += term;
    }
    return sum;
}

// independent oracle: nested adaptive quadrature of (u^2+v^2)^{-3/2}
double rect_quad(double a, double b, double c, double d) {
    auto inner = [&](double u) {
        return integrate([u](double v) { return std::pow(u * u + v * v, -1.5); }, c, d,
                         1e-12, 1e-12)
            .value;
    };
    return integrate(inner, a, b, 1e-11, 1e-11).value;
}
}  // namespace

TEST_CASE("bessel_i0 values") {
    CHECK(bessel_i0(0.0) == 1.0);
    CHECK(bessel_i0(2.0) ==
          doctest::Approx(static_cast<double>(i0_series_ld(2.0L, 30))).epsilon(1e-13));
    CHECK(bessel_i0(2.0) == doctest::Approx(2.2795853023360673).epsilon(1e-13));
    CHECK(bessel_i0(20.0) ==
          doctest::Approx(static_cast<double>(i0_series_ld(20.0L, 60))).epsilon(1e-12));
    CHECK(bessel_i0(0.5) == doctest::Approx(1.0634833707413235).epsilon(1e-13));
    CHECK(bessel_i0(700.0) == doctest::Approx(1.5295933476718737e302).epsilon(1e-11));
}

TEST_CASE("bessel_i0 branches overlap at the crossover") {
    const double below = bessel_i0(15.0);  // power series
    const double above = bessel_i0(std::nextafter(15.0, 16.0));
    CHECK(std::abs(above - below) / below < 1e-12);
    CHECK(below ==
          doctest::Approx(static_cast<double>(i0_series_ld(15.0L, 80))).epsilon(1e-12));
}

TEST_CASE("bessel_i0 sanity bounds and domain") {
    for (double x : {1.0, 2.0, 5.0, 10.0, 30.0, 100.0}) {
        CHECK(bessel_i0(x) >= 1.0);
        CHECK(bessel_i0(x) >= std::exp(x) / (std::exp(1.0) * std::sqrt(x)));
    }
    CHECK_THROWS_AS(bessel_i0(-0.1), std::domain_error);
    CHECK_THROWS_AS(bessel_i0(701.0), std::domain_error);
}

TEST_CASE("normal_cdf and h_fn") {
    CHECK(normal_cdf(0.0) == 0.5);
    CHECK(normal_cdf(1.0) == doctest::Approx(0.84134474606854295).epsilon(1e-15));
    CHECK(normal_cdf(-8.0) + normal_cdf(8.0) == doctest::Approx(1.0).epsilon(1e-15));
    for (double z : {0.1, 0.5, 1.0, 2.5, 7.0}) CHECK(h_fn(z) + h_fn(-z) == 0.0);
    CHECK(h_fn(1.0) == doctest::Approx(2 * 0.84134474606854295 - 1).epsilon(1e-14));
}

TEST_CASE("max_abs_cdf limits and branch agreement") {
    CHECK(max_abs_cdf(0.05) < 1e-10);
    CHECK(max_abs_cdf(8.0) > 1.0 - 1e-10);
    CHECK(std::abs(max_abs_cdf_theta(1.0) - max_abs_cdf_gauss(1.0)) < 1e-12);
    for (double z : {0.3, 0.5, 1.0, 2.0, 4.0})
        CHECK(std::abs(max_abs_cdf_theta(z) - max_abs_cdf_gauss(z)) < 1e-10);
    // frozen two-route values
    CHECK(max_abs_cdf(1.0) == doctest::Approx(0.37077742979952391).epsilon(1e-12));
    CHECK(max_abs_cdf(0.5) == doctest::Approx(0.0091569902897607558).epsilon(1e-11));
    CHECK(max_abs_cdf(2.0) == doctest::Approx(0.90899947615363375).epsilon(1e-12));
    double prev = 0.0;
    for (double z = 0.2; z <= 4.0; z += 0.05) {
        const double v = max_abs_cdf(z);
        CHECK(v >= prev);
        CHECK(v <= 1.0);
        prev = v;
    }
    CHECK_THROWS_AS(max_abs_cdf(0.0), std::domain_error);
    CHECK_THROWS_AS(max_abs_cdf(-1.0), std::domain_error);
}

TEST_CASE("chi3 character") {
    CHECK(chi3(1) == 1);
    CHECK(chi3(2) == -1);
    CHECK(chi3(3) == 0);
    CHECK(chi3(4) == 1);
    CHECK(chi3(-1) == -1);
    CHECK(chi3(-2) == 1);
    for (long long m = -50; m <= 50; ++m)
        for (long long n = -50; n <= 50; ++n) CHECK(chi3(m * n) == chi3(m) * chi3(n));
    // sine form
    for (long long n = -10; n <= 10; ++n)
        CHECK(chi3(n) ==
              doctest::Approx(2.0 / std::sqrt(3.0) * std::sin(2.0 * kPi * n / 3.0))
                  .epsilon(1e-12));
}

TEST_CASE("dirichlet_l_chi3 values") {
    CHECK(dirichlet_l_chi3(1.0) == doctest::Approx(kPi / (3 * std::sqrt(3.0))).epsilon(1e-13));
    CHECK(3 * std::sqrt(3.0) / kPi * dirichlet_l_chi3(1.0) ==
          doctest::Approx(1.0).epsilon(1e-12));
    // direct block summation oracle at s = 2 (a million terms in long double)
    long double direct = 0.0L;
    for (long long k = 333333; k >= 0; --k) {
        const long double n1 = 3.0L * k + 1.0L, n2 = 3.0L * k + 2.0L;
        direct += 1.0L / (n1 * n1) - 1.0L / (n2 * n2);
    }
    CHECK(dirichlet_l_chi3(2.0) == doctest::Approx(static_cast<double>(direct)).epsilon(1e-9));
    CHECK(dirichlet_l_chi3(2.0) == doctest::Approx(0.78130241289648630).epsilon(1e-13));
    CHECK(dirichlet_l_chi3(3.0) == doctest::Approx(0.88402381175007986).epsilon(1e-13));
    CHECK(dirichlet_l_chi3(0.5) == doctest::Approx(0.48086755769682863).epsilon(1e-12));
    CHECK(std::abs(dirichlet_l_chi3(30.0) - (1.0 - std::pow(2.0, -30.0))) < 1e-9);
    CHECK_THROWS_AS(dirichlet_l_chi3(0.0), std::domain_error);
    CHECK_THROWS_AS(dirichlet_l_chi3(-1.0), std::domain_error);
}

TEST_CASE("gamma_real") {
    CHECK(gamma_real(1.0) == 1.0);
    CHECK(gamma_real(0.5) == doctest::Approx(std::sqrt(kPi)).epsilon(1e-12));
    CHECK(gamma_real(5.0) == doctest::Approx(24.0).epsilon(1e-12));
    CHECK_THROWS_AS(gamma_real(0.0), std::domain_error);
    CHECK_THROWS_AS(gamma_real(-2.5), std::domain_error);
}

TEST_CASE("g_fn") {
    CHECK(g_fn(1.0, 1.0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(g_fn(3.0, 4.0) == doctest::Approx(5.0 / 12.0).epsilon(1e-15));
    CHECK(g_fn(-1.0, 1.0) == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-15));
    CHECK_THROWS_AS(g_fn(0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(g_fn(1.0, 0.0), std::domain_error);
}

TEST_CASE("rect_integral closed forms") {
    CHECK(rect_integral(1.0, kInf, 1.0, kInf) ==
          doctest::Approx(2.0 - std::sqrt(2.0)).epsilon(1e-13));
    const double q1212 = std::sqrt(5.0) - std::sqrt(2.0) - std::sqrt(2.0) / 2.0;
    CHECK(rect_integral(1.0, 2.0, 1.0, 2.0) == doctest::Approx(q1212).epsilon(1e-13));
    CHECK(rect_integral(-1.0, 1.0, 1.0, 3.0) ==
          doctest::Approx(2.0 * (std::sqrt(2.0) - std::sqrt(10.0) / 3.0)).epsilon(1e-13));
}

TEST_CASE("rect_integral vs quadrature oracle") {
    CHECK(rect_integral(1.0, 2.0, 1.0, 2.0) ==
          doctest::Approx(rect_quad(1.0, 2.0, 1.0, 2.0)).epsilon(1e-9));
    CHECK(rect_integral(-1.0, 1.0, 1.0, 3.0) ==
          doctest::Approx(rect_quad(-1.0, 1.0, 1.0, 3.0)).epsilon(1e-9));
    CHECK(rect_integral(0.0, 1.0, 1.0, 2.0) ==
          doctest::Approx(rect_quad(1e-12, 1.0, 1.0, 2.0)).epsilon(1e-5));
    CHECK(rect_integral(-3.0, -1.0, -5.0, 2.0) ==
          doctest::Approx(rect_quad(-3.0, -1.0, -5.0, 2.0)).epsilon(1e-9));
}

TEST_CASE("rect_integral splitting additivity and sign") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> lo(0.1, 3.0), len(0.2, 4.0), cut(0.2, 0.8);
    for (int it = 0; it < 200; ++it) {
        const double a = lo(rng), b = a + len(rng);
        const double c = lo(rng), d = c + len(rng);
        const double full = rect_integral(a, b, c, d);
        CHECK(full >= 0.0);
        const double mu = a + cut(rng) * (b - a);
        CHECK(rect_integral(a, mu, c, d) + rect_integral(mu, b, c, d) ==
              doctest::Approx(full).epsilon(1e-12));
        const double mv = c + cut(rng) * (d - c);
        CHECK(rect_integral(a, b, c, mv) + rect_integral(a, b, mv, d) ==
              doctest::Approx(full).epsilon(1e-12));
    }
}

TEST_CASE("rect_integral rejects divergent rectangles") {
    CHECK_THROWS_AS(rect_integral(-1.0, 1.0, -1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(rect_integral(0.0, 1.0, 0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(rect_integral(-1.0, 1.0, 0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(rect_integral(2.0, 1.0, 0.5, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(rect_integral(1.0, 2.0, 1.0, 1.0), std::invalid_argument);
}
