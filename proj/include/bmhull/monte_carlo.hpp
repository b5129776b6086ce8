#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bmhull/constants.hpp"
#include "bmhull/geometry.hpp"

namespace bmhull {

enum class Estimator { hull, support };

struct Estimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::uint64_t n_paths = 0;
    std::uint64_t n_steps = 0;
    double total_time = 1.0;
    Estimator estimator = Estimator::hull;
};

// Per-path statistics whose expectation is ell_Omega (up to discretization
// bias): hull perimeter or support-function estimator, both normalized by
// sqrt(8 pi t).
double hull_statistic(std::span<const Point2> points, const AngleSet& omega,
                      double total_time);
double support_statistic(std::span<const Point2> points, const AngleSet& omega,
                         double total_time);

// Monte Carlo estimates over n_paths seeded paths. Deterministic for fixed
// (seed, n_steps, n_paths, total_time) regardless of n_threads (counter-based
// streams, accumulation in path-index order). n_threads = 0 picks the
// hardware count.
Estimate estimate_ell_hull(const AngleSet& omega, std::uint64_t n_steps,
                           std::uint64_t n_paths, std::uint64_t seed,
                           double total_time, int n_threads = 0);
Estimate estimate_ell_support(const AngleSet& omega, std::uint64_t n_steps,
                              std::uint64_t n_paths, std::uint64_t seed,
                              double total_time, int n_threads = 0);

struct VerifyRow {
    OmegaPreset preset = OmegaPreset::One;
    double mc = 0.0;
    double std_error = 0.0;
    double analytic = 0.0;
    double rel_err = 0.0;
    bool pass = false;
    // The discrete hull underestimates the constant, so an estimate sitting
    // significantly above the analytic value signals a bias-model violation.
    bool bias_warning = false;
};

struct VerifyReport {
    std::vector<VerifyRow> rows;
    std::uint64_t n_steps = 0;
    std::uint64_t n_paths = 0;
    std::uint64_t seed = 0;
    double rel_tol = 0.0;
    bool all_pass = false;
};

// Runs the hull estimator for all eight presets against analytic_ell.
// Paths are generated once and shared across presets; per-preset results are
// identical to the corresponding estimate_ell_hull call.
VerifyReport verify_all(std::uint64_t n_steps, std::uint64_t n_paths,
                        std::uint64_t seed, double rel_tol, int n_threads = 0);

}  // namespace bmhull
