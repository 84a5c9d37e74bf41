#include "qzs/corpora.hpp"

#include <algorithm>
#include <cmath>

#include "qzs/diagnostics.hpp"
#include "qzs/initial_data.hpp"
#include "qzs/rng.hpp"
#include "qzs/solver.hpp"

namespace qzs {
namespace {

SpectralField random_real_field(const TorusGrid& g, Rng& rng, int max_mode) {
  SpectralField f(g, Realness::real);
  const long top = rng.integer(1, max_mode);
  for (int k = 1; k <= top; ++k) {
    const cplx c = rng.complex_normal() / std::pow(double(k), rng.uniform(0.0, 2.0));
    f(k) = c;
    f(-k) = std::conj(c);
  }
  return f;
}

}  // namespace

double gn_corpus_max(std::uint64_t seed, int draws, int max_mode) {
  const TorusGrid g(64);
  Rng rng(seed);
  double best = 0.0;
  for (int d = 0; d < draws; ++d) best = std::max(best, gn_l4_ratio(random_real_field(g, rng, max_mode)));
  return best;
}

double product_corpus_max(std::uint64_t seed, int draws, int max_mode) {
  const TorusGrid g(64);
  Rng rng(seed);
  double best = 0.0;
  for (int d = 0; d < draws; ++d) {
    const SpectralField f = random_real_field(g, rng, max_mode);
    const SpectralField h = random_real_field(g, rng, max_mode);
    for (double s : {-0.5, -0.25, 0.0, 0.25, 0.5})
      best = std::max(best, product_inequality_ratio(f, h, s));
  }
  return best;
}

namespace {

Trajectory probe_run(std::uint64_t seed, const PropagatorParams& p) {
  const TorusGrid g(32);
  SolverConfig cfg;
  cfg.dt = 1e-3;
  cfg.record_stride = 10;
  return solve(random_smooth_data(g, seed, 6, 1.0), p, 1.0, cfg);
}

double max_ratio(const std::vector<RateSample>& rates) {
  double best = 0.0;
  for (const RateSample& r : rates) best = std::max(best, std::abs(r.lhs_rate) / r.rhs_bound);
  return best;
}

}  // namespace

double wave_rate_probe_max(std::uint64_t seed, const PropagatorParams& p) {
  return max_ratio(wave_energy_rate(probe_run(seed, p), 0.0, p));
}

double ut_rate_probe_max(std::uint64_t seed, const PropagatorParams& p) {
  return max_ratio(ut_energy_rate(probe_run(seed, p), 0.0, p));
}

double nonsolution_residual(std::uint64_t seed, const PropagatorParams& p) {
  const TorusGrid g(32);
  QZSState s[3] = {QZSState::zero(g), QZSState::zero(g), QZSState::zero(g)};
  for (int i = 0; i < 3; ++i) {
    const InitialData d = random_smooth_data(g, seed + std::uint64_t(i), 6, 1.0);
    s[i].u = d.u0;
    s[i].n = d.n0;
    s[i].dn = d.n1;
    s[i].time = 1e-2 * i;
  }
  const auto [a, b] = rhs_residual(s[0], s[1], s[2], p);
  return std::min(a, b);
}

}  // namespace qzs
