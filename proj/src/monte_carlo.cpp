#include "bmhull/monte_carlo.hpp"

#include <array>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <thread>

#include "bmhull/brownian.hpp"

namespace bmhull {

namespace {
constexpr double kPi = 3.14159265358979323846;

int resolve_threads(int n_threads) {
    if (n_threads > 0) return n_threads;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

// Runs fn(path_index) for every index; work is claimed in chunks so the
// assignment of indices to threads never affects stored results.
void parallel_paths(std::uint64_t n_paths, int n_threads,
                    const std::function<void(std::uint64_t)>& fn) {
    n_threads = resolve_threads(n_threads);
    if (n_threads <= 1 || n_paths < 2) {
        for (std::uint64_t i = 0; i < n_paths; ++i) fn(i);
        return;
    }
    std::atomic<std::uint64_t> next{0};
    constexpr std::uint64_t kChunk = 8;
    auto worker = [&] {
        for (;;) {
            const std::uint64_t lo = next.fetch_add(kChunk);
            if (lo >= n_paths) return;
            const std::uint64_t hi = std::min(lo + kChunk, n_paths);
            for (std::uint64_t i = lo; i < hi; ++i) fn(i);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (int i = 0; i < n_threads; ++i) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
}

// Deterministic two-pass mean / standard error in path-index order.
Estimate reduce(const std::vector<double>& values, std::uint64_t n_steps,
                double total_time, Estimator estimator) {
    const std::size_t n = values.size();
    double sum = 0.0, comp = 0.0;
    for (double v : values) {
        const double y = v - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    const double mean = sum / static_cast<double>(n);
    double sq = 0.0;
    for (double v : values) sq += (v - mean) * (v - mean);
    const double sd = n > 1 ? std::sqrt(sq / static_cast<double>(n - 1)) : 0.0;
    Estimate e;
    e.mean = mean;
    e.std_error = sd / std::sqrt(static_cast<double>(n));
    e.n_paths = n;
    e.n_steps = n_steps;
    e.total_time = total_time;
    e.estimator = estimator;
    return e;
}

void check_budget(std::uint64_t n_steps, std::uint64_t n_paths, double total_time) {
    if (n_steps < 1) throw std::invalid_argument("n_steps must be >= 1");
    if (n_paths < 2) throw std::invalid_argument("n_paths must be >= 2");
    if (!(total_time > 0.0)) throw std::invalid_argument("total_time must be positive");
}
}  // namespace

double hull_statistic(std::span<const Point2> points, const AngleSet& omega,
                      double total_time) {
    return rotated_hull_perimeter(points, omega) / std::sqrt(8.0 * kPi * total_time);
}

double support_statistic(std::span<const Point2> points, const AngleSet& omega,
                         double total_time) {
    if (omega.is_full_circle())
        throw std::domain_error("support estimator needs a finite angle set");
    double h = -1e308;
    for (double w : omega.angles()) h = std::max(h, support_value(points, w));
    return 2.0 * kPi * h / std::sqrt(8.0 * kPi * total_time);
}

Estimate estimate_ell_hull(const AngleSet& omega, std::uint64_t n_steps,
                           std::uint64_t n_paths, std::uint64_t seed,
                           double total_time, int n_threads) {
    check_budget(n_steps, n_paths, total_time);
    std::vector<double> values(n_paths);
    parallel_paths(n_paths, n_threads, [&](std::uint64_t i) {
        const Path p = sample_path({n_steps, total_time, seed, i});
        values[i] = hull_statistic(p.points, omega, total_time);
    });
    return reduce(values, n_steps, total_time, Estimator::hull);
}

Estimate estimate_ell_support(const AngleSet& omega, std::uint64_t n_steps,
                              std::uint64_t n_paths, std::uint64_t seed,
                              double total_time, int n_threads) {
    check_budget(n_steps, n_paths, total_time);
    if (omega.is_full_circle())
        throw std::domain_error("support estimator needs a finite angle set");
    std::vector<double> values(n_paths);
    parallel_paths(n_paths, n_threads, [&](std::uint64_t i) {
        const Path p = sample_path({n_steps, total_time, seed, i});
        values[i] = support_statistic(p.points, omega, total_time);
    });
    return reduce(values, n_steps, total_time, Estimator::support);
}

VerifyReport verify_all(std::uint64_t n_steps, std::uint64_t n_paths,
                        std::uint64_t seed, double rel_tol, int n_threads) {
    check_budget(n_steps, n_paths, 1.0);
    if (!(rel_tol > 0.0) || rel_tol > 0.1)
        throw std::invalid_argument("rel_tol must lie in (0, 0.1]");

    constexpr int kNumPresets = 8;
    // Shared path generation: the path and its hull are computed once, the
    // per-preset statistic only touches the few hull vertices. Results match
    // estimate_ell_hull exactly (hulling is idempotent).
    std::vector<std::array<double, kNumPresets>> values(n_paths);
    std::array<AngleSet, kNumPresets> omegas = {
        preset_angles(kAllPresets[0]), preset_angles(kAllPresets[1]),
        preset_angles(kAllPresets[2]), preset_angles(kAllPresets[3]),
        preset_angles(kAllPresets[4]), preset_angles(kAllPresets[5]),
        preset_angles(kAllPresets[6]), preset_angles(kAllPresets[7])};
    parallel_paths(n_paths, n_threads, [&](std::uint64_t i) {
        const Path p = sample_path({n_steps, 1.0, seed, i});
        const ConvexPolygon pre = convex_hull(p.points);
        for (int j = 0; j < kNumPresets; ++j)
            values[i][j] = hull_statistic(pre.vertices, omegas[j], 1.0);
    });

    VerifyReport report;
    report.n_steps = n_steps;
    report.n_paths = n_paths;
    report.seed = seed;
    report.rel_tol = rel_tol;
    report.all_pass = true;
    std::vector<double> column(n_paths);
    for (int j = 0; j < kNumPresets; ++j) {
        for (std::uint64_t i = 0; i < n_paths; ++i) column[i] = values[i][j];
        const Estimate e = reduce(column, n_steps, 1.0, Estimator::hull);
        VerifyRow row;
        row.preset = kAllPresets[j];
        row.mc = e.mean;
        row.std_error = e.std_error;
        row.analytic = analytic_ell(row.preset).value;
        row.rel_err = std::abs(row.mc - row.analytic) / row.analytic;
        row.pass = row.rel_err <= rel_tol;
        row.bias_warning = row.mc - 3.0 * row.std_error > row.analytic;
        report.all_pass = report.all_pass && row.pass;
        report.rows.push_back(row);
    }
    return report;
}

}  // namespace bmhull
