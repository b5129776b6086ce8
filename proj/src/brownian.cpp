#include "bmhull/brownian.hpp"

#include <cmath>
#include <stdexcept>

namespace bmhull {

namespace {
constexpr double kTwoPi = 6.28318530717958647692;

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
    const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
    hi = static_cast<std::uint32_t>(p >> 32);
    lo = static_cast<std::uint32_t>(p);
}

// uniform in (0,1), 53-bit resolution, never exactly 0 or 1
inline double u01(std::uint64_t bits) {
    return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
}

// Step counter reserved for the half-plane exit sampler so it never collides
// with path increments.
constexpr std::uint64_t kExitSamplerStep = ~0ull;
}  // namespace

std::array<std::uint32_t, 4> philox4x32(const std::array<std::uint32_t, 4>& counter,
                                        const std::array<std::uint32_t, 2>& key) {
    std::uint32_t x0 = counter[0], x1 = counter[1], x2 = counter[2], x3 = counter[3];
    std::uint32_t k0 = key[0], k1 = key[1];
    for (int round = 0; round < 10; ++round) {
        std::uint32_t hi0, lo0, hi1, lo1;
        mulhilo(kPhiloxM0, x0, hi0, lo0);
        mulhilo(kPhiloxM1, x2, hi1, lo1);
        x0 = hi1 ^ x1 ^ k0;
        x1 = lo1;
        x2 = hi0 ^ x3 ^ k1;
        x3 = lo0;
        k0 += kWeyl0;
        k1 += kWeyl1;
    }
    return {x0, x1, x2, x3};
}

std::array<double, 2> normal_pair(std::uint64_t seed, std::uint64_t stream,
                                  std::uint64_t step) {
    const std::array<std::uint32_t, 4> ctr = {
        static_cast<std::uint32_t>(step), static_cast<std::uint32_t>(step >> 32),
        static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    const std::array<std::uint32_t, 2> key = {static_cast<std::uint32_t>(seed),
                                              static_cast<std::uint32_t>(seed >> 32)};
    const auto out = philox4x32(ctr, key);
    const std::uint64_t a = out[0] | (static_cast<std::uint64_t>(out[1]) << 32);
    const std::uint64_t b = out[2] | (static_cast<std::uint64_t>(out[3]) << 32);
    const double r = std::sqrt(-2.0 * std::log(u01(a)));
    const double phi = kTwoPi * u01(b);
    return {r * std::cos(phi), r * std::sin(phi)};
}

Path sample_path(const PathConfig& config) {
    if (config.n_steps < 1) throw std::invalid_argument("sample_path: n_steps must be >= 1");
    if (!(config.total_time > 0.0))
        throw std::invalid_argument("sample_path: total_time must be positive");

    Path path;
    path.total_time = config.total_time;
    path.n_steps = config.n_steps;
    path.points.resize(config.n_steps + 1);
    path.points[0] = {0.0, 0.0};

    const double scale = std::sqrt(config.total_time / static_cast<double>(config.n_steps));
    double x = 0.0, y = 0.0;
    for (std::uint64_t k = 0; k < config.n_steps; ++k) {
        const auto g = normal_pair(config.seed, config.path_index, k);
        x += scale * g[0];
        y += scale * g[1];
        path.points[k + 1] = {x, y};
    }
    return path;
}

double halfplane_exit_from_normal(double z) { return 1.0 / (z * z); }

double sample_halfplane_exit(std::uint64_t seed, std::uint64_t index) {
    const auto g = normal_pair(seed, index, kExitSamplerStep);
    return halfplane_exit_from_normal(g[0]);
}

}  // namespace bmhull
