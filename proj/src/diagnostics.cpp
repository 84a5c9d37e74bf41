#include "qzs/diagnostics.hpp"

#include <cmath>

#include "qzs/error.hpp"

namespace qzs {

double mass(const QZSState& state) {
  const double n = l2_norm(state.u);
  return n * n;
}

double interaction_integral(const SpectralField& u, const SpectralField& n) {
  const std::vector<cplx> pu = fft_inverse(u);
  const std::vector<double> pn = fft_inverse_real(n);
  double sum = 0.0;
  for (std::size_t j = 0; j < pu.size(); ++j) sum += pn[j] * std::norm(pu[j]);
  return sum / static_cast<double>(pu.size());
}

ConservedQuantities energy(const QZSState& state, const PropagatorParams& params) {
  if (std::abs(state.n(0)) != 0.0 || std::abs(state.dn(0)) != 0.0)
    throw Error(ErrorKind::mean_zero_violation,
                "energy needs mean-zero n and dn; apply the gauge first");
  const double e2 = params.eps * params.eps;
  auto sq = [](double x) { return x * x; };
  ConservedQuantities q;
  q.time = state.time;
  q.mass = mass(state);
  EnergyTerms& t = q.terms;
  t.kinetic = params.alpha * sq(sobolev_norm(state.u, 1.0, Homogeneity::homogeneous));
  t.dispersion = e2 * sq(sobolev_norm(state.u, 2.0, Homogeneity::homogeneous));
  t.potential = 0.5 * sq(l2_norm(state.n));
  t.wave_kinetic = sq(sobolev_norm(state.dn, -1.0, Homogeneity::homogeneous)) /
                   (2.0 * params.beta * params.beta);
  t.wave_dispersion = 0.5 * e2 * sq(sobolev_norm(state.n, 1.0, Homogeneity::homogeneous));
  t.interaction = interaction_integral(state.u, state.n);
  q.energy = t.sum();
  return q;
}

double l4_norm_pow4(const SpectralField& f) {
  const TorusGrid big(2 * f.grid().size());
  const SpectralField sq = modulus_squared(resample(f, big), false);
  const double n = l2_norm(sq);
  return n * n;
}

double gn_l4_ratio(const SpectralField& f) {
  const double fx = sobolev_norm(f, 1.0, Homogeneity::homogeneous);
  if (fx == 0.0)
    throw Error(ErrorKind::not_applicable,
                "Gagliardo-Nirenberg ratio is vacuous for constant fields");
  const double f2 = l2_norm(f);
  return l4_norm_pow4(f) / (fx * f2 * f2 * f2);
}

EnergyBound nonlinear_energy_bound(const QZSState& state, const PropagatorParams& params) {
  if (std::abs(state.n(0)) != 0.0)
    throw Error(ErrorKind::mean_zero_violation, "energy bound needs mean-zero n");
  if (!(params.eps > 0.0))
    throw Error(ErrorKind::singular_parameter, "energy bound requires eps > 0");
  const double e2 = params.eps * params.eps;
  const double m = mass(state);
  const double ux = sobolev_norm(state.u, 1.0, Homogeneity::homogeneous);
  const double nn = l2_norm(state.n);
  const double G = kInhomogeneousGnConstant;
  EnergyBound b;
  b.constant = m * m + G * G * m * m * m / (2.0 * e2);
  b.lhs = std::abs(interaction_integral(state.u, state.n));
  b.rhs = 0.25 * nn * nn + 0.5 * e2 * ux * ux + b.constant;
  return b;
}

namespace {

double wave_functional(const QZSState& s, double a, const PropagatorParams& p) {
  auto sq = [](double x) { return x * x; };
  const double b2 = p.beta * p.beta;
  return 0.5 * (sq(sobolev_norm(s.dn, a)) / b2 + sq(sobolev_norm(derivative(s.n, 1), a)) +
                p.eps * p.eps * sq(sobolev_norm(derivative(s.n, 2), a)));
}

}  // namespace

std::vector<RateSample> wave_energy_rate(const Trajectory& trajectory, double a,
                                         const PropagatorParams& params) {
  if (trajectory.size() < 3)
    throw Error(ErrorKind::insufficient_data, "wave energy rate needs at least 3 snapshots");
  std::vector<double> e(trajectory.size());
  for (std::size_t i = 0; i < trajectory.size(); ++i)
    e[i] = wave_functional(trajectory[i], a, params);
  std::vector<RateSample> out;
  for (std::size_t i = 1; i + 1 < trajectory.size(); ++i) {
    const QZSState& s = trajectory[i];
    const double dt = trajectory[i + 1].time - trajectory[i - 1].time;
    if (dt == 0.0) throw Error(ErrorKind::input, "repeated snapshot times");
    const double dn = sobolev_norm(s.dn, a);
    const double u = sobolev_norm(s.u, a + 2.0);
    out.push_back({s.time, (e[i + 1] - e[i - 1]) / dt, dn * dn + u * u});
  }
  return out;
}

SpectralField schrodinger_time_derivative(const QZSState& state, const PropagatorParams& params) {
  const double e2 = params.eps * params.eps;
  SpectralField lin = state.u;
  lin.apply([&](int k) {
    const double kk = double(k) * k;
    return -params.alpha * kk - e2 * kk * kk;
  });
  SpectralField ut = lin - exact_product(state.u, state.n);
  ut *= cplx(0.0, 1.0);
  return ut;
}

std::vector<RateSample> ut_energy_rate(const Trajectory& trajectory, double b,
                                       const PropagatorParams& params) {
  if (trajectory.size() < 3)
    throw Error(ErrorKind::insufficient_data, "rate needs at least 3 snapshots");
  std::vector<SpectralField> ut;
  ut.reserve(trajectory.size());
  for (const QZSState& s : trajectory) ut.push_back(schrodinger_time_derivative(s, params));
  std::vector<RateSample> out;
  for (std::size_t i = 1; i + 1 < trajectory.size(); ++i) {
    const double dt = trajectory[i + 1].time - trajectory[i - 1].time;
    if (dt == 0.0) throw Error(ErrorKind::input, "repeated snapshot times");
    const double up = sobolev_norm(ut[i + 1], b), um = sobolev_norm(ut[i - 1], b);
    const QZSState& s = trajectory[i];
    const double rhs = sobolev_norm(ut[i], b) * (sobolev_norm(exact_product(ut[i], s.n), b) +
                                                 sobolev_norm(exact_product(s.u, s.dn), b));
    out.push_back({s.time, 0.5 * (up * up - um * um) / dt, rhs});
  }
  return out;
}

double product_inequality_ratio(const SpectralField& f, const SpectralField& g, double s,
                                double delta) {
  if (s < -0.5 || s > 0.5) throw Error(ErrorKind::domain, "s must lie in [-1/2, 1/2]");
  const double den = sobolev_norm(f, 0.5 + delta) * sobolev_norm(g, s);
  if (den == 0.0) throw Error(ErrorKind::not_applicable, "zero denominator");
  const TorusGrid big(2 * f.grid().size());
  const SpectralField fg = exact_product(resample(f, big), resample(g, big));
  return sobolev_norm(fg, s) / den;
}

}  // namespace qzs
