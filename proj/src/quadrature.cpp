#include "bmhull/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <vector>

namespace bmhull {

namespace {

// 15-point Kronrod abscissae (positive half) and weights, with the embedded
// 7-point Gauss weights on the odd-index nodes. Values from QUADPACK dqk15.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Interval {
    double a, b, value, error;
    bool operator<(const Interval& o) const { return error < o.error; }
};

Interval gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double resk = kWgk[7] * fc;
    double resg = kWg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double x = h * kXgk[j];
        const double fsum = f(c - x) + f(c + x);
        resk += kWgk[j] * fsum;
        if (j % 2 == 1) resg += kWg[j / 2] * fsum;
    }
    Interval r;
    r.a = a;
    r.b = b;
    r.value = resk * h;
    r.error = std::abs((resk - resg) * h);
    return r;
}

}  // namespace

QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double abs_tol, double rel_tol, int max_intervals) {
    if (!(a <= b)) throw std::invalid_argument("integrate: bad interval");
    if (a == b) return {0.0, 0.0};

    // start from several panels so a narrow bump inside a wide range is seen
    constexpr int kInitialPanels = 8;
    std::priority_queue<Interval> heap;
    double total = 0.0, err = 0.0;
    for (int i = 0; i < kInitialPanels; ++i) {
        const double lo = a + (b - a) * i / kInitialPanels;
        const double hi = (i + 1 == kInitialPanels) ? b : a + (b - a) * (i + 1) / kInitialPanels;
        Interval iv = gk15(f, lo, hi);
        total += iv.value;
        err += iv.error;
        heap.push(iv);
    }
    int n = kInitialPanels;
    while (n < max_intervals && err > std::max(abs_tol, rel_tol * std::abs(total))) {
        Interval worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {  // interval at rounding limit
            heap.push(worst);
            break;
        }
        Interval left = gk15(f, worst.a, mid);
        Interval right = gk15(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++n;
    }

    // Re-sum from the heap in magnitude-stable order for the final answer.
    std::vector<Interval> parts;
    parts.reserve(heap.size());
    while (!heap.empty()) {
        parts.push_back(heap.top());
        heap.pop();
    }
    std::sort(parts.begin(), parts.end(),
              [](const Interval& x, const Interval& y) { return x.a < y.a; });
    double value = 0.0, comp = 0.0, errsum = 0.0;
    for (const Interval& p : parts) {  // Kahan
        const double y = p.value - comp;
        const double t = value + y;
        comp = (t - value) - y;
        value = t;
        errsum += p.error;
    }
    return {value, errsum};
}

QuadResult integrate_to_infinity(const std::function<double(double)>& f, double a,
                                 double abs_tol, double rel_tol, double tail_eps) {
    double scale = 0.0;
    for (double x : {a + 0.25, a + 0.5, a + 1.0, a + 2.0, a + 4.0})
        scale = std::max(scale, std::abs(f(x)));
    if (scale == 0.0) scale = 1.0;

    double cut = std::max(1.0, std::abs(a) * 2.0);
    while (cut < 1e12 && std::abs(f(a + cut)) > tail_eps * scale) cut *= 2.0;
    return integrate(f, a, a + cut, abs_tol, rel_tol);
}

}  // namespace bmhull
