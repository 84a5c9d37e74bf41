#include "qzs/state.hpp"

#include <cmath>

namespace qzs {

QZSState QZSState::zero(const TorusGrid& grid, double time) {
  return QZSState{SpectralField(grid), SpectralField(grid, Realness::real),
                  SpectralField(grid, Realness::real), time, {}};
}

GaugedData zero_mean_gauge(const SpectralField& u0, const SpectralField& n0,
                           const SpectralField& n1) {
  GaugedData g{{u0, n0, n1}, {n0(0).real(), n1(0).real()}};
  g.data.n0(0) = 0.0;
  g.data.n1(0) = 0.0;
  return g;
}

double gauge_phase(const GaugeRecord& record, double t) {
  return t * record.mean_n0 + 0.5 * t * t * record.mean_n1;
}

namespace {

QZSState shift(const QZSState& state, const GaugeRecord& record, double sign) {
  QZSState out = state;
  const double t = state.time;
  out.u *= std::polar(1.0, -sign * gauge_phase(record, t));
  out.n(0) += sign * (record.mean_n0 + t * record.mean_n1);
  out.dn(0) += sign * record.mean_n1;
  return out;
}

}  // namespace

QZSState ungauge(const QZSState& state, const GaugeRecord& record) {
  QZSState out = shift(state, record, 1.0);
  out.gauge = {state.gauge.mean_n0 - record.mean_n0,
               state.gauge.mean_n1 - record.mean_n1};
  return out;
}

QZSState regauge(const QZSState& state, const GaugeRecord& record) {
  QZSState out = shift(state, record, -1.0);
  out.gauge = {state.gauge.mean_n0 + record.mean_n0,
               state.gauge.mean_n1 + record.mean_n1};
  return out;
}

}  // namespace qzs
