#pragma once

#include <array>
#include <cstdint>

#include "bmhull/geometry.hpp"

namespace bmhull {

// Discrete planar Brownian path: points[0] = origin, n_steps increments of
// variance total_time / n_steps per coordinate.
struct Path {
    std::vector<Point2> points;
    double total_time = 1.0;
    std::uint64_t n_steps = 0;
};

struct PathConfig {
    std::uint64_t n_steps = 1;
    double total_time = 1.0;
    std::uint64_t seed = 0;
    std::uint64_t path_index = 0;
};

// Philox-4x32-10 counter-based generator (Salmon et al., SC'11). Stateless:
// every 128-bit counter/64-bit key pair maps to 128 independent output bits,
// so parallel path generation is reproducible regardless of scheduling.
std::array<std::uint32_t, 4> philox4x32(const std::array<std::uint32_t, 4>& counter,
                                        const std::array<std::uint32_t, 2>& key);

// One pair of independent standard normal deviates for (seed, stream, step),
// via Box-Muller on the Philox output block.
std::array<double, 2> normal_pair(std::uint64_t seed, std::uint64_t stream,
                                  std::uint64_t step);

// Deterministic Brownian path keyed by (seed, path_index); identical configs
// give bit-identical paths.
Path sample_path(const PathConfig& config);

// Sample of the first hitting time of level 1 by a linear Brownian motion,
// T = 1/Z^2 with Z standard normal.
double sample_halfplane_exit(std::uint64_t seed, std::uint64_t index);
double halfplane_exit_from_normal(double z);

}  // namespace bmhull
