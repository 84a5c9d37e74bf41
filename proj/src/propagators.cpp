#include "qzs/propagators.hpp"

#include <cmath>

#include "qzs/error.hpp"

namespace qzs {

void PropagatorParams::validate() const {
  if (!(alpha > 0.0)) throw Error(ErrorKind::domain, "alpha must be positive");
  if (!(beta > 0.0)) throw Error(ErrorKind::domain, "beta must be positive");
  if (!(eps >= 0.0)) throw Error(ErrorKind::domain, "eps must be nonnegative");
}

double schrodinger_symbol(const PropagatorParams& p, double k) {
  const double k2 = k * k;
  return p.alpha * k2 + p.eps * p.eps * k2 * k2;
}

double wave_frequency(const PropagatorParams& p, double k) {
  return p.beta * std::abs(k) * bracket(p.eps * k);
}

SpectralField apply_schrodinger(const PropagatorParams& p, double t, SpectralField field) {
  const Realness r = field.realness();
  field.apply([&](int k) { return std::polar(1.0, -t * schrodinger_symbol(p, k)); });
  field.set_realness(t == 0.0 ? r : Realness::complex);
  return field;
}

SpectralField apply_wave_sine(const PropagatorParams& p, double t, SpectralField field) {
  field.apply([&](int k) {
    const double w = wave_frequency(p, k);
    return w == 0.0 ? t : std::sin(w * t) / w;
  });
  return field;
}

SpectralField apply_wave_cosine(const PropagatorParams& p, double t, SpectralField field) {
  field.apply([&](int k) { return std::cos(wave_frequency(p, k) * t); });
  return field;
}

SpectralField apply_wave_cosine_rate(const PropagatorParams& p, double t, SpectralField field) {
  field.apply([&](int k) {
    const double w = wave_frequency(p, k);
    return -w * std::sin(w * t);
  });
  return field;
}

WavePair wave_flow(const PropagatorParams& p, double t, const SpectralField& n,
                   const SpectralField& dn) {
  WavePair out{n, dn};
  const std::size_t m = n.data().size();
  auto on = out.n.data();
  auto odn = out.dn.data();
  const auto in = n.data();
  const auto idn = dn.data();
  for (std::size_t i = 0; i < m; ++i) {
    const double w = wave_frequency(p, n.grid().frequency(i));
    const double c = std::cos(w * t);
    const double s = w == 0.0 ? t : std::sin(w * t) / w;
    const double ws = w == 0.0 ? 0.0 : w * std::sin(w * t);
    on[i] = c * in[i] + s * idn[i];
    odn[i] = -ws * in[i] + c * idn[i];
  }
  return out;
}

double duhamel_constant(double rho, const PropagatorParams& p) {
  if (!(rho >= 0.0 && rho <= 1.0))
    throw Error(ErrorKind::domain, "rho must lie in [0, 1]");
  if (rho == 1.0) return 1.0 / p.beta;
  if (!(p.eps > 0.0))
    throw Error(ErrorKind::singular_parameter,
                "the Duhamel constant for rho < 1 requires eps > 0");
  if (rho == 0.0) return 1.0 / (p.beta * p.eps);
  return std::sqrt(rho) * std::pow((1.0 - rho) / (rho * p.eps * p.eps), 0.5 * (1.0 - rho)) /
         p.beta;
}

}  // namespace qzs
