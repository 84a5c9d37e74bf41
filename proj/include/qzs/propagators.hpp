#pragma once

#include "qzs/spectral_field.hpp"

namespace qzs {

struct PropagatorParams {
  double alpha = 1.0;
  double beta = 1.0;
  double eps = 0.0;

  /// Throws domain unless alpha > 0, beta > 0, eps >= 0.
  void validate() const;
};

/// alpha k^2 + eps^2 k^4
double schrodinger_symbol(const PropagatorParams& p, double k);
/// beta |k| <eps k>
double wave_frequency(const PropagatorParams& p, double k);

/// coeffs(k) *= exp(-i t (alpha k^2 + eps^2 k^4))
SpectralField apply_schrodinger(const PropagatorParams& p, double t, SpectralField field);
/// coeffs(k) *= sin(omega t)/omega, and t at omega = 0
SpectralField apply_wave_sine(const PropagatorParams& p, double t, SpectralField field);
/// coeffs(k) *= cos(omega t)
SpectralField apply_wave_cosine(const PropagatorParams& p, double t, SpectralField field);
/// coeffs(k) *= -omega sin(omega t), the time derivative of the cosine flow
SpectralField apply_wave_cosine_rate(const PropagatorParams& p, double t, SpectralField field);

/// Free wave flow of (n, dn) over time t.
struct WavePair {
  SpectralField n;
  SpectralField dn;
};
WavePair wave_flow(const PropagatorParams& p, double t, const SpectralField& n,
                   const SpectralField& dn);

/// c2(rho, beta, eps) of the Duhamel estimate for the wave propagator.
double duhamel_constant(double rho, const PropagatorParams& p);

}  // namespace qzs
