#pragma once

#include "qzs/spectral_field.hpp"

namespace qzs {

/// Smooth plateau built from exp(-1/x) pieces: 1 on [-1,1], 0 outside
/// [-2,2], monotone in between.
double plateau_bump(double x);

/// Time cutoff psi; identical to plateau_bump.
inline double cutoff_psi(double t) { return plateau_bump(t); }

/// Fourier multiplier J_h: coeffs(k) *= eta(h k).
template <class Bump>
SpectralField mollify(SpectralField field, double h, Bump&& eta) {
  field.apply([&](int k) { return eta(h * k); });
  return field;
}

/// J_h with the plateau bump; h must be positive.
SpectralField mollify(SpectralField field, double h);

}  // namespace qzs
