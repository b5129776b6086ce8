#include "bmhull/special_functions.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace bmhull {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrt1_2 = 0.70710678118654752440;

// default truncation control for every series in this module
constexpr Tolerance kSeries{};

[[noreturn]] void series_diverged(const char* what) {
    throw std::runtime_error(std::string(what) + ": series did not converge within max_terms");
}

// Kahan-compensated accumulator for the alternating theta series.
struct CompensatedSum {
    double s = 0.0, c = 0.0;
    void add(double x) {
        const double y = x - c;
        const double t = s + y;
        c = (t - s) - y;
        s = t;
    }
};
}  // namespace

double bessel_i0(double x) {
    if (!(x >= 0.0) || x > 700.0)
        throw std::domain_error("bessel_i0: argument must be in [0, 700]");
    if (x <= 15.0) {
        // ascending series I0(x) = sum ( (x/2)^(2k) / k!^2 ), all terms positive
        const double q = 0.25 * x * x;
        CompensatedSum sum;
        double term = 1.0;
        sum.add(term);
        for (int k = 1; k < 200; ++k) {
            term *= q / (static_cast<double>(k) * k);
            sum.add(term);
            if (term < 1e-17 * sum.s) break;
        }
        return sum.s;
    }
    // large-argument expansion I0(x) ~ e^x/sqrt(2 pi x) * sum a_k x^-k,
    // a_k = a_{k-1} (2k-1)^2 / (8k); truncated at the smallest term
    double sum = 1.0, a = 1.0, prev = std::numeric_limits<double>::max();
    for (int k = 1; k < 60; ++k) {
        a *= static_cast<double>(2 * k - 1) * (2 * k - 1) / (8.0 * k);
        const double term = a / std::pow(x, k);
        if (term >= prev || term < 1e-17 * sum) break;
        sum += term;
        prev = term;
    }
    return std::exp(x) / std::sqrt(2.0 * kPi * x) * sum;
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z * kSqrt1_2); }

double h_fn(double z) { return std::erf(z * kSqrt1_2); }

double max_abs_cdf_theta(double z) {
    if (!(z > 0.0)) throw std::domain_error("max_abs_cdf: z must be positive");
    // L(z) = P(T >= 1/z^2) for the exit time T of [-1,1]
    const double t = 1.0 / (z * z);
    const double e = kPi * kPi * t / 2.0;
    CompensatedSum sum;
    int n = 0;
    for (;; ++n) {
        if (n >= kSeries.max_terms) series_diverged("max_abs_cdf_theta");
        const double np = n + 0.5;
        const double term = std::exp(-np * np * e) / np;
        sum.add((n % 2 == 0) ? term : -term);
        if (term < 1e-17) break;
    }
    const double v = 2.0 / kPi * sum.s;
    return std::min(1.0, std::max(0.0, v));
}

double max_abs_cdf_gauss(double z) {
    if (!(z > 0.0)) throw std::domain_error("max_abs_cdf: z must be positive");
    // 1 - L(z) = 4 sum_{n>=0} [Phi((4n+3)z) - Phi((4n+1)z)]
    CompensatedSum sum;
    for (long long n = 0;; ++n) {
        if (n >= kSeries.max_terms) series_diverged("max_abs_cdf_gauss");
        const double lo = (4.0 * n + 1.0) * z;
        const double hi = (4.0 * n + 3.0) * z;
        const double w = normal_cdf(hi) - normal_cdf(lo);
        sum.add(w);
        if (lo > 9.0 || (n > 0 && w < 1e-18)) break;
    }
    const double v = 1.0 - 4.0 * sum.s;
    return std::min(1.0, std::max(0.0, v));
}

double max_abs_cdf(double z) {
    if (!(z > 0.0)) throw std::domain_error("max_abs_cdf: z must be positive");
    return z < 1.0 ? max_abs_cdf_theta(z) : max_abs_cdf_gauss(z);
}

int chi3(long long n) {
    const long long r = ((n % 3) + 3) % 3;
    if (r == 1) return 1;
    if (r == 2) return -1;
    return 0;
}

double dirichlet_l_chi3(double s) {
    if (!(s > 0.0)) throw std::domain_error("dirichlet_l_chi3: s must be positive");
    // Block n in {3k+1, 3k+2, 3k+3} contributes (3k+1)^-s - (3k+2)^-s.
    const int K = 64;
    CompensatedSum sum;
    int k = 0;
    for (; k < K; ++k) {
        const double block = std::pow(3.0 * k + 1.0, -s) - std::pow(3.0 * k + 2.0, -s);
        sum.add(block);
        if (block < 1e-18) {
            ++k;
            break;
        }
    }
    // Euler-Maclaurin tail from k onward: integral + f/2 - f'/12 + f'''/720 - ...
    const double y1 = 3.0 * k + 1.0, y2 = 3.0 * k + 2.0;
    double integral;
    if (s == 1.0)
        integral = std::log(y2 / y1) / 3.0;
    else
        integral = (std::pow(y1, 1.0 - s) - std::pow(y2, 1.0 - s)) / (3.0 * (s - 1.0));
    auto deriv = [&](int m) {  // f^(m)(k) for odd m
        double poch = 1.0;
        for (int j = 0; j < m; ++j) poch *= s + j;
        const double diff = std::pow(y1, -s - m) - std::pow(y2, -s - m);
        return -std::pow(3.0, m) * poch * diff;
    };
    const double f0 = std::pow(y1, -s) - std::pow(y2, -s);
    double tail = integral + 0.5 * f0 - deriv(1) / 12.0 + deriv(3) / 720.0 -
                  deriv(5) / 30240.0 + deriv(7) / 1209600.0;
    return sum.s + tail;
}

double gamma_real(double s) {
    if (!(s > 0.0)) throw std::domain_error("gamma_real: s must be positive");
    return std::tgamma(s);
}

double g_fn(double x, double y) {
    if (x == 0.0 || y == 0.0) throw std::domain_error("g_fn: arguments must be nonzero");
    return std::sqrt(x * x + y * y) / (x * y);
}

namespace {

// Corner antiderivative value with the infinite limits g(x,inf)=1/x,
// g(inf,y)=1/y, g(inf,inf)=0. Finite arguments must be positive.
double corner_g(double x, double y) {
    const bool xi = std::isinf(x), yi = std::isinf(y);
    if (xi && yi) return 0.0;
    if (xi) return 1.0 / y;
    if (yi) return 1.0 / x;
    return g_fn(x, y);
}

// Piece in the closed first quadrant: 0 <= x0 < x1, 0 <= y0 < y1,
// at most one of x0, y0 equal to zero.
double quadrant_piece(double x0, double x1, double y0, double y1) {
    if (x0 == 0.0 && y0 == 0.0)
        throw std::domain_error("rect_integral: rectangle touches the origin");
    if (x0 == 0.0) return corner_g(x1, y0) - corner_g(x1, y1);
    if (y0 == 0.0) return corner_g(x0, y1) - corner_g(x1, y1);
    return corner_g(x0, y1) + corner_g(x1, y0) - corner_g(x0, y0) - corner_g(x1, y1);
}

// Map an axis-free sub-rectangle into the first quadrant by symmetry.
double piece_abs(double a, double b, double c, double d) {
    double x0 = std::abs(a), x1 = std::abs(b);
    if (x0 > x1) std::swap(x0, x1);
    double y0 = std::abs(c), y1 = std::abs(d);
    if (y0 > y1) std::swap(y0, y1);
    return quadrant_piece(x0, x1, y0, y1);
}

}  // namespace

double rect_integral(double a, double b, double c, double d) {
    if (std::isnan(a) || std::isnan(b) || std::isnan(c) || std::isnan(d) || !(a < b) || !(c < d))
        throw std::invalid_argument("rect_integral: need a < b and c < d");
    if (a <= 0.0 && 0.0 <= b && c <= 0.0 && 0.0 <= d)
        throw std::domain_error("rect_integral: origin inside rectangle, integral diverges");

    double total = 0.0;
    const bool split_u = (a < 0.0 && 0.0 < b);
    const bool split_v = (c < 0.0 && 0.0 < d);
    const double us[3] = {a, split_u ? 0.0 : b, b};
    const double vs[3] = {c, split_v ? 0.0 : d, d};
    const int nu = split_u ? 2 : 1, nv = split_v ? 2 : 1;
    for (int i = 0; i < nu; ++i)
        for (int j = 0; j < nv; ++j)
            total += piece_abs(us[i], us[i + 1], vs[j], vs[j + 1]);
    return total;
}

}  // namespace bmhull
