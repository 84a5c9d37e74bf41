#pragma once

#include <cstdint>

#include "qzs/propagators.hpp"

namespace qzs {

/// Seeded probes whose maxima are frozen as regression constants. Each is a
/// deterministic function of its arguments.

/// Max Gagliardo-Nirenberg ratio over random real mean-zero trigonometric
/// polynomials with up to max_mode modes on a 64-point grid.
double gn_corpus_max(std::uint64_t seed, int draws = 200, int max_mode = 10);

/// Max product_inequality_ratio over random (f, g) pairs and
/// s in {-1/2, -1/4, 0, 1/4, 1/2}.
double product_corpus_max(std::uint64_t seed, int draws = 200, int max_mode = 10);

/// max over interior snapshots of |lhs_rate| / rhs_bound for a solved run
/// from random_smooth_data(seed) on 32 points, T = 1, dt = 1e-3, a = 0.
double wave_rate_probe_max(std::uint64_t seed, const PropagatorParams& p);

/// Same run as wave_rate_probe_max for ut_energy_rate with b = 0.
double ut_rate_probe_max(std::uint64_t seed, const PropagatorParams& p);

/// Smaller of the two rhs_residual values for three unrelated random states
/// spaced 1e-2 apart.
double nonsolution_residual(std::uint64_t seed, const PropagatorParams& p);

}  // namespace qzs
