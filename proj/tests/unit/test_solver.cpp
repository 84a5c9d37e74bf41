#include <doctest.h>

#include <cmath>

#include "../support/convert.hpp"
#include "qzs/diagnostics.hpp"
#include "qzs/initial_data.hpp"
#include "qzs/solver.hpp"

using namespace qzs;

namespace {

double state_gap(const QZSState& a, const QZSState& b) {
  return l2_norm(a.u - b.u) + l2_norm(a.n - b.n) + l2_norm(a.dn - b.dn);
}

QZSState from_data(const InitialData& d) {
  return QZSState{d.u0, d.n0, d.n1, 0.0, {}};
}

}  // namespace

TEST_CASE("config validation") {
  SolverConfig c;
  c.dt = 0.0;
  CHECK_THROWS_AS(c.validate(), Error);
  c = {};
  c.picard_tol = 1e-15;
  CHECK_THROWS_AS(c.validate(), Error);
  c = {};
  c.picard_maxiter = 0;
  CHECK_THROWS_AS(c.validate(), Error);
  const TorusGrid g(16);
  CHECK_THROWS_AS(solve(plane_wave_data(g, 1), {}, -1.0, {}), Error);
  InitialData bad = plane_wave_data(g, 1);
  bad.n0 = SpectralField(TorusGrid(32), Realness::real);
  CHECK_THROWS_AS(solve(bad, {}, 1.0, {}), Error);
}

TEST_CASE("plane wave is an exact solution") {
  const TorusGrid g(64);
  const PropagatorParams p{1.0, 1.0, 0.5};
  const int N = 4;
  const double omega = p.alpha * N * N + p.eps * p.eps * std::pow(N, 4);
  for (Scheme scheme : {Scheme::strang, Scheme::picard}) {
    SolverConfig cfg;
    cfg.scheme = scheme;
    cfg.record_stride = 50;
    const Trajectory traj = solve(plane_wave_data(g, N), p, 1.0, cfg);
    CHECK(traj.back().time == 1.0);
    for (const QZSState& s : traj) {
      SpectralField exact(g);
      exact(N) = std::polar(1.0, -omega * s.time);
      CHECK(l2_norm(s.u - exact) <= 1e-8);
      CHECK(l2_norm(s.n) <= 1e-13);
      CHECK(l2_norm(s.dn) <= 1e-13);
    }
  }
}

TEST_CASE("zero data gives the zero trajectory") {
  const TorusGrid g(16);
  const Trajectory traj = solve({SpectralField(g), SpectralField(g, Realness::real),
                                 SpectralField(g, Realness::real)},
                                {}, 0.05, {});
  CHECK(traj.size() == 51);
  for (const QZSState& s : traj) CHECK(l2_norm(s.u) + l2_norm(s.n) + l2_norm(s.dn) == 0.0);
}

TEST_CASE("final step is shortened to land on T") {
  const TorusGrid g(16);
  SolverConfig cfg;
  cfg.dt = 0.3;
  const Trajectory traj = solve(plane_wave_data(g, 1), {}, 1.0, cfg);
  REQUIRE(traj.size() == 5);
  CHECK(traj[3].time == doctest::Approx(0.9));
  CHECK(traj[4].time == 1.0);
}

TEST_CASE("Picard step special cases") {
  const TorusGrid g(32);
  const PropagatorParams p{1.0, 1.2, 0.3};
  SolverConfig cfg;
  cfg.scheme = Scheme::picard;
  SUBCASE("u = 0 reproduces the free wave flow") {
    QZSState s = QZSState::zero(g);
    s.n = to_field(oracle::random_coeffs(32, 8, 1, true), true);
    s.n(0) = 0.0;
    s.dn = to_field(oracle::random_coeffs(32, 8, 2, true), true);
    s.dn(0) = 0.0;
    for (Quadrature q : {Quadrature::midpoint, Quadrature::trapezoid}) {
      cfg.quadrature = q;
      const QZSState out = picard_step(s, p, cfg, 0.01);
      const WavePair w = wave_flow(p, 0.01, s.n, s.dn);
      CHECK(max_diff(out.n, w.n) < 1e-14);
      CHECK(max_diff(out.dn, w.dn) < 1e-14);
      CHECK(l2_norm(out.u) == 0.0);
    }
  }
  SUBCASE("single mode keeps n = 0") {
    const QZSState s = from_data(plane_wave_data(g, 3));
    const QZSState out = picard_step(s, p, cfg, 0.01);
    CHECK(l2_norm(out.n) < 1e-15);
    CHECK(max_diff(out.u, apply_schrodinger(p, 0.01, s.u)) < 1e-14);
    CHECK(state_gap(strang_step(s, p, cfg, 0.01), out) < 1e-14);
  }
  SUBCASE("large steps on large data do not contract") {
    QZSState s = from_data(random_smooth_data(g, 9, 6, 50.0));
    cfg.picard_maxiter = 5;
    CHECK_THROWS_AS(picard_step(s, p, cfg, 0.5), ContractionFailure);
    try {
      picard_step(s, p, cfg, 0.5);
    } catch (const ContractionFailure& e) {
      CHECK(e.iterations() == 5);
      CHECK(e.residual() > cfg.picard_tol);
      CHECK(e.kind() == ErrorKind::contraction_failure);
    }
  }
}

TEST_CASE("Strang local error is third order against Picard") {
  const TorusGrid g(32);
  const PropagatorParams p{1.0, 1.0, 0.5};
  const QZSState s = from_data(random_smooth_data(g, 3, 3));
  SolverConfig cfg;
  cfg.picard_tol = 1e-14;
  std::vector<double> gaps;
  for (double h : {0.02, 0.01, 0.005})
    gaps.push_back(state_gap(strang_step(s, p, cfg, h), picard_step(s, p, cfg, h)));
  CHECK(gaps[0] / gaps[1] > 6.0);
  CHECK(gaps[1] / gaps[2] > 6.0);
}

TEST_CASE("Picard and Strang trajectories agree to second order") {
  const TorusGrid g(32);
  const PropagatorParams p{1.0, 1.0, 0.5};
  const InitialData d = random_smooth_data(g, 4);
  std::vector<double> gaps;
  for (double dt : {4e-3, 2e-3}) {
    SolverConfig a, b;
    a.dt = b.dt = dt;
    b.scheme = Scheme::picard;
    gaps.push_back(state_gap(solve(d, p, 0.2, a).back(), solve(d, p, 0.2, b).back()));
  }
  CHECK(gaps[0] / gaps[1] > 3.5);
  CHECK(gaps[1] < 1e-4);
}

TEST_CASE("Strang step properties") {
  const TorusGrid g(32);
  const PropagatorParams p{1.0, 1.0, 0.5};
  SolverConfig cfg;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const QZSState s = from_data(random_smooth_data(g, seed));
    const QZSState f = strang_step(s, p, cfg, 1e-2);
    CHECK(std::abs(mass(f) - mass(s)) <= 1e-12 * mass(s));
    const QZSState back = strang_step(f, p, cfg, -1e-2);
    CHECK(state_gap(back, s) < 1e-10);
    CHECK(f.n(0) == 0.0);
    CHECK(f.dn(0) == 0.0);
    CHECK(f.n.conjugate_symmetry_defect() < 1e-12);
  }
  const QZSState pw = from_data(plane_wave_data(g, 5));
  CHECK(max_diff(strang_step(pw, p, cfg, 0.1).u, apply_schrodinger(p, 0.1, pw.u)) < 1e-14);
}

TEST_CASE("gauge: means evolve linearly and the gauged system stays mean zero") {
  const TorusGrid g(32);
  const PropagatorParams p{1.0, 1.0, 0.5};
  InitialData d = random_smooth_data(g, 6);
  d.n0(0) = 0.4;
  d.n1(0) = -0.3;
  SolverConfig cfg;
  cfg.record_stride = 100;
  const Trajectory traj = solve(d, p, 1.0, cfg);
  const GaugeRecord rec{0.4, -0.3};
  for (const QZSState& s : traj) {
    CHECK(s.n(0).real() == doctest::Approx(0.4 - 0.3 * s.time).epsilon(1e-13));
    CHECK(s.dn(0).real() == doctest::Approx(-0.3).epsilon(1e-13));
    const QZSState gs = regauge(s, rec);
    CHECK(std::abs(gs.n(0)) < 1e-14);
    CHECK(std::abs(gs.dn(0)) < 1e-14);
  }
}

TEST_CASE("ungauged trajectories solve the original system") {
  const TorusGrid g(32);
  const PropagatorParams p{1.0, 1.0, 0.5};
  InitialData d = random_smooth_data(g, 7, 3);
  d.n0(0) = 0.5;
  d.n1(0) = 0.2;
  std::vector<double> worst;
  for (double dt : {2e-3, 1e-3}) {
    SolverConfig cfg;
    cfg.dt = dt;
    const Trajectory traj = solve(d, p, 0.1, cfg);
    double w = 0.0;
    for (std::size_t i = 1; i + 1 < traj.size(); ++i) {
      const auto [ru, rn] = rhs_residual(traj[i - 1], traj[i], traj[i + 1], p);
      w = std::max({w, ru, rn});
    }
    worst.push_back(w);
  }
  CHECK(worst[1] < 1e-5);
  CHECK(worst[0] / worst[1] > 3.0);
}

TEST_CASE("residual oracle") {
  const TorusGrid g(64);
  const PropagatorParams p{1.0, 1.0, 0.5};
  SolverConfig cfg;
  const Trajectory traj = solve(plane_wave_data(g, 4), p, 0.01, cfg);
  const auto [ru, rn] = rhs_residual(traj[3], traj[4], traj[5], p);
  CHECK(ru <= 1e-8);
  CHECK(rn <= 1e-8);
  const QZSState z0 = QZSState::zero(g, 0.0), z1 = QZSState::zero(g, 0.1),
                 z2 = QZSState::zero(g, 0.2);
  const auto [a, b] = rhs_residual(z0, z1, z2, p);
  CHECK(a == 0.0);
  CHECK(b == 0.0);
  CHECK_THROWS_AS(rhs_residual(z2, z1, z0, p), Error);
}

TEST_CASE("blow-up is reported with the last finite state") {
  const TorusGrid g(16);
  InitialData d = plane_wave_data(g, 1, 1e140);
  d.u0(2) = 1e140;
  try {
    solve(d, {}, 1.0, {});
    FAIL("expected BlowUpDetected");
  } catch (const BlowUpDetected& e) {
    CHECK(e.last_finite_time() == 0.0);
    CHECK(e.partial().size() == 1);
    CHECK(e.kind() == ErrorKind::blow_up);
  }
}
