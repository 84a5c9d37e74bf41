#include "qzs/solver.hpp"

#include <cmath>
#include <string>

namespace qzs {

void SolverConfig::validate() const {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw Error(ErrorKind::domain, "dt must be positive");
  if (!(picard_tol >= 1e-14)) throw Error(ErrorKind::domain, "picard_tol must be at least 1e-14");
  if (picard_maxiter < 1) throw Error(ErrorKind::domain, "picard_maxiter must be at least 1");
  if (record_stride < 1) throw Error(ErrorKind::domain, "record_stride must be at least 1");
}

BlowUpDetected::BlowUpDetected(double last_finite_time, Trajectory partial)
    : Error(ErrorKind::blow_up,
            "non-finite values after t = " + std::to_string(last_finite_time)),
      last_finite_time_(last_finite_time),
      partial_(std::move(partial)) {}

namespace {

// u * n evaluated pointwise on the grid nodes.
SpectralField grid_product(const SpectralField& u, const SpectralField& n) {
  std::vector<cplx> pu = fft_inverse(u);
  const std::vector<double> pn = fft_inverse_real(n);
  for (std::size_t j = 0; j < pu.size(); ++j) pu[j] *= pn[j];
  return fft_forward(u.grid(), pu);
}

// beta^2 (|u|^2)_xx
SpectralField wave_source(const SpectralField& u, const PropagatorParams& p, bool dealiased) {
  SpectralField src = derivative(modulus_squared(u, dealiased), 2);
  src *= p.beta * p.beta;
  return src;
}

double pair_distance(const QZSState& a, const QZSState& b) {
  return l2_norm(a.u - b.u) + l2_norm(a.n - b.n);
}

QZSState picard_midpoint(const QZSState& s0, const PropagatorParams& p,
                         const SolverConfig& cfg, double h) {
  const double hh = 0.5 * h;
  const SpectralField u_half = apply_schrodinger(p, hh, s0.u);
  const WavePair w_half = wave_flow(p, hh, s0.n, s0.dn);
  const SpectralField u_free = apply_schrodinger(p, h, s0.u);
  const WavePair w_free = wave_flow(p, h, s0.n, s0.dn);

  QZSState cur = s0;
  cur.u = u_free;
  cur.n = w_free.n;
  cur.dn = w_free.dn;
  cur.time = s0.time + h;
  double residual = 0.0;
  for (int it = 0; it < cfg.picard_maxiter; ++it) {
    SpectralField u_mid = u_half + apply_schrodinger(p, -hh, cur.u);
    u_mid *= 0.5;
    const WavePair back = wave_flow(p, -hh, cur.n, cur.dn);
    SpectralField n_mid = w_half.n + back.n;
    n_mid *= 0.5;

    const SpectralField src = wave_source(u_mid, p, cfg.dealias);
    QZSState next = cur;
    next.u = u_free - cplx(0.0, h) * apply_schrodinger(p, hh, grid_product(u_mid, n_mid));
    next.n = w_free.n + h * apply_wave_sine(p, hh, src);
    next.dn = w_free.dn + h * apply_wave_cosine(p, hh, src);
    next.n.enforce_real();
    next.dn.enforce_real();
    residual = pair_distance(next, cur);
    cur = std::move(next);
    if (residual < cfg.picard_tol) return cur;
  }
  throw ContractionFailure(residual, cfg.picard_maxiter);
}

QZSState picard_trapezoid(const QZSState& s0, const PropagatorParams& p,
                          const SolverConfig& cfg, double h) {
  const double hh = 0.5 * h;
  const WavePair w_free = wave_flow(p, h, s0.n, s0.dn);
  const SpectralField src0 = wave_source(s0.u, p, cfg.dealias);
  const SpectralField u_pred =
      apply_schrodinger(p, h, s0.u - cplx(0.0, hh) * grid_product(s0.u, s0.n));

  QZSState cur = s0;
  cur.time = s0.time + h;
  // The n update only involves the left endpoint source.
  cur.n = w_free.n + hh * apply_wave_sine(p, h, src0);
  cur.n.enforce_real();
  const SpectralField dn_known = w_free.dn + hh * apply_wave_cosine(p, h, src0);
  cur.u = apply_schrodinger(p, h, s0.u);
  cur.dn = w_free.dn;
  double residual = 0.0;
  for (int it = 0; it < cfg.picard_maxiter; ++it) {
    QZSState next = cur;
    next.u = u_pred - cplx(0.0, hh) * grid_product(cur.u, cur.n);
    next.dn = dn_known + hh * wave_source(cur.u, p, cfg.dealias);
    next.dn.enforce_real();
    residual = pair_distance(next, cur) + l2_norm(next.dn - cur.dn);
    cur = std::move(next);
    if (residual < cfg.picard_tol) return cur;
  }
  throw ContractionFailure(residual, cfg.picard_maxiter);
}

}  // namespace

QZSState picard_step(const QZSState& state, const PropagatorParams& params,
                     const SolverConfig& config, double h) {
  return config.quadrature == Quadrature::midpoint ? picard_midpoint(state, params, config, h)
                                                   : picard_trapezoid(state, params, config, h);
}

QZSState strang_step(const QZSState& state, const PropagatorParams& params,
                     const SolverConfig& config, double h) {
  const double hh = 0.5 * h;
  QZSState s = state;
  s.u = apply_schrodinger(params, hh, s.u);
  WavePair w = wave_flow(params, hh, s.n, s.dn);

  std::vector<cplx> pu = fft_inverse(s.u);
  const std::vector<double> pn = fft_inverse_real(w.n);
  for (std::size_t j = 0; j < pu.size(); ++j) pu[j] *= std::polar(1.0, -h * pn[j]);
  s.u = fft_forward(s.u.grid(), pu);
  w.dn += h * wave_source(s.u, params, config.dealias);

  s.u = apply_schrodinger(params, hh, s.u);
  w = wave_flow(params, hh, w.n, w.dn);
  s.n = std::move(w.n);
  s.dn = std::move(w.dn);
  s.n.enforce_real();
  s.dn.enforce_real();
  s.time = state.time + h;
  return s;
}

QZSState step(const QZSState& state, const PropagatorParams& params,
              const SolverConfig& config, double h) {
  return config.scheme == Scheme::strang ? strang_step(state, params, config, h)
                                         : picard_step(state, params, config, h);
}

bool state_is_finite(const QZSState& state, double limit) {
  for (const SpectralField* f : {&state.u, &state.n, &state.dn})
    for (const cplx& c : f->data())
      if (!std::isfinite(c.real()) || !std::isfinite(c.imag()) || std::abs(c) > limit)
        return false;
  return true;
}

Trajectory solve(const InitialData& data, const PropagatorParams& params, double T,
                 const SolverConfig& config) {
  params.validate();
  config.validate();
  if (!(T > 0.0) || !std::isfinite(T)) throw Error(ErrorKind::domain, "T must be positive");
  const TorusGrid& g = data.u0.grid();
  if (!(data.n0.grid() == g) || !(data.n1.grid() == g))
    throw Error(ErrorKind::input_shape, "u0, n0, n1 must share one grid");

  const GaugedData gauged = zero_mean_gauge(data.u0, data.n0, data.n1);
  QZSState s{gauged.data.u0, gauged.data.n0, gauged.data.n1, 0.0, gauged.record};
  s.n.enforce_real();
  s.dn.enforce_real();

  Trajectory out;
  out.push_back(ungauge(s, gauged.record));
  const long steps = std::max(1L, static_cast<long>(std::ceil(T / config.dt - 1e-9)));
  for (long i = 1; i <= steps; ++i) {
    const double t_next = i == steps ? T : static_cast<double>(i) * config.dt;
    QZSState next = step(s, params, config, t_next - s.time);
    next.time = t_next;
    if (!state_is_finite(next)) {
      if (out.back().time != s.time) out.push_back(ungauge(s, gauged.record));
      throw BlowUpDetected(s.time, std::move(out));
    }
    s = std::move(next);
    if (i % config.record_stride == 0 || i == steps) out.push_back(ungauge(s, gauged.record));
  }
  return out;
}

std::pair<double, double> rhs_residual(const QZSState& prev, const QZSState& cur,
                                       const QZSState& next, const PropagatorParams& params) {
  const double h = 0.5 * (next.time - prev.time);
  if (!(h > 0.0)) throw Error(ErrorKind::input, "states must be ordered in time");
  const cplx i(0.0, 1.0);

  SpectralField du = apply_schrodinger(params, -h, next.u) - apply_schrodinger(params, h, prev.u);
  du *= i / (2.0 * h);
  const SpectralField un = exact_product(cur.u, cur.n);
  const double ru = l2_norm(du - un);

  const WavePair fwd = wave_flow(params, -h, next.n, next.dn);
  const WavePair bwd = wave_flow(params, h, prev.n, prev.dn);
  SpectralField dn_rate = fwd.n - bwd.n;
  SpectralField ddn_rate = fwd.dn - bwd.dn;
  dn_rate *= 1.0 / (2.0 * h);
  ddn_rate *= 1.0 / (2.0 * h);
  SpectralField src = derivative(exact_product(cur.u, conjugate(cur.u)), 2);
  src *= params.beta * params.beta;
  const double rn = l2_norm(dn_rate) + l2_norm(ddn_rate - src) / (params.beta * params.beta);
  return {ru, rn};
}

}  // namespace qzs
