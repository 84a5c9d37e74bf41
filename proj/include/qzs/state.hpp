#pragma once

#include "qzs/spectral_field.hpp"

namespace qzs {

/// Spatial means (1/2pi) int n0 and (1/2pi) int n1 removed by the gauge.
struct GaugeRecord {
  double mean_n0 = 0.0;
  double mean_n1 = 0.0;

  bool is_trivial() const { return mean_n0 == 0.0 && mean_n1 == 0.0; }
};

/// (u, n, dn = d/dt n) at one time. gauge records the means that have been
/// removed from n and dn; it is all zero for states of the original system.
struct QZSState {
  SpectralField u;
  SpectralField n;
  SpectralField dn;
  double time = 0.0;
  GaugeRecord gauge{};

  const TorusGrid& grid() const { return u.grid(); }
  static QZSState zero(const TorusGrid& grid, double time = 0.0);
};

struct InitialData {
  SpectralField u0;
  SpectralField n0;
  SpectralField n1;
};

struct GaugedData {
  InitialData data;
  GaugeRecord record;
};

/// Remove the means of n0 and n1. u0 is unchanged; the gauge phase only
/// acts at positive times.
GaugedData zero_mean_gauge(const SpectralField& u0, const SpectralField& n0,
                           const SpectralField& n1);

/// Map a gauged state at time t back to the original variables:
/// u *= exp(-i(t mean_n0 + t^2/2 mean_n1)), n += mean_n0 + t mean_n1,
/// dn += mean_n1.
QZSState ungauge(const QZSState& state, const GaugeRecord& record);

/// Inverse of ungauge.
QZSState regauge(const QZSState& state, const GaugeRecord& record);

/// Phase theta(t) such that ungauge multiplies u by exp(-i theta).
double gauge_phase(const GaugeRecord& record, double t);

}  // namespace qzs
