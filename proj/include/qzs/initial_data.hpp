#pragma once

#include <cstdint>

#include "qzs/state.hpp"

namespace qzs {

/// (amplitude e^{iNx}, 0, 0)
InitialData plane_wave_data(const TorusGrid& grid, int N, double amplitude = 1.0);

/// Random trigonometric data with modes |k| <= max_mode and coefficients
/// decaying like <k>^{-4}. n0 and n1 are real with zero mean, u has zero
/// mean too. Scaled so that ||u0||_{H^s} + ||n0||_{H^l} + ||n1||_{H^{l-1}}
/// equals size.
InitialData random_smooth_data(const TorusGrid& grid, std::uint64_t seed, int max_mode = 6,
                               double size = 1.0, double s = 2.0, double l = 1.0);

/// Fixed low-mode data used for the eps -> 0 sweeps:
/// u0 = 0.5 e^{ix} + 0.25 e^{-2ix}, n0 = 0.3 cos 2x, n1 = 0.2 sin x.
InitialData smooth_reference_data(const TorusGrid& grid);

}  // namespace qzs
