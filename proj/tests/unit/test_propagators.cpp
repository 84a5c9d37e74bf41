#include <doctest.h>

#include <cmath>

#include "../support/convert.hpp"
#include "qzs/error.hpp"
#include "qzs/propagators.hpp"

using namespace qzs;

namespace {

SpectralField single(int M, int k, cplx v = 1.0) {
  SpectralField f{TorusGrid(M)};
  f(k) = v;
  return f;
}

}  // namespace

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS((PropagatorParams{0.0, 1.0, 0.0}.validate()), Error);
  CHECK_THROWS_AS((PropagatorParams{1.0, -1.0, 0.0}.validate()), Error);
  CHECK_THROWS_AS((PropagatorParams{1.0, 1.0, -0.1}.validate()), Error);
  CHECK_NOTHROW((PropagatorParams{1.0, 1.0, 0.0}.validate()));
}

TEST_CASE("Schrodinger multiplier") {
  const PropagatorParams p{1.0, 1.0, 1.0};
  const SpectralField f = to_field(oracle::random_coeffs(32, 15, 1));
  CHECK(max_diff(apply_schrodinger(p, 0.0, f), f) == 0.0);
  const SpectralField g = apply_schrodinger(p, 3.7, f);
  CHECK(g(0) == f(0));
  const SpectralField m = apply_schrodinger(p, oracle::pi / 2.0, single(16, 1));
  CHECK(std::abs(m(1) - cplx(-1.0, 0.0)) < 1e-15);
  for (double s : {-1.0, 0.0, 2.0})
    CHECK(sobolev_norm(g, s) == doctest::Approx(sobolev_norm(f, s)).epsilon(1e-14));
  // direct evaluation of exp(-it(alpha k^2 + eps^2 k^4))
  const PropagatorParams q{0.7, 1.0, 0.3};
  const SpectralField h = apply_schrodinger(q, 0.9, f);
  for (int k = -16; k <= 15; ++k) {
    const double w = 0.7 * k * k + 0.09 * std::pow(k, 4);
    CHECK(std::abs(h(k) - f(k) * std::polar(1.0, -0.9 * w)) < 1e-12);
  }
}

TEST_CASE("property: Schrodinger group law") {
  const PropagatorParams p{1.3, 1.0, 0.4};
  for (int trial = 0; trial < 20; ++trial) {
    const SpectralField f = to_field(oracle::random_coeffs(32, 15, 100 + trial));
    const double t = 0.1 * trial, s = 0.37 - 0.05 * trial;
    CHECK(max_diff(apply_schrodinger(p, t, apply_schrodinger(p, s, f)),
                   apply_schrodinger(p, t + s, f)) < 1e-11);
  }
}

TEST_CASE("wave multipliers") {
  const PropagatorParams p0{1.0, 1.0, 0.0};
  const SpectralField f = to_field(oracle::random_coeffs(32, 15, 2, true), true);
  CHECK(l2_norm(apply_wave_sine(p0, 0.0, f)) == 0.0);
  CHECK(max_diff(apply_wave_cosine(p0, 0.0, f), f) == 0.0);
  const SpectralField z = single(16, 0, 2.0);
  CHECK(std::abs(apply_wave_sine(p0, 1.5, z)(0) - 3.0) < 1e-15);
  CHECK(std::abs(apply_wave_sine(p0, oracle::pi / 4.0, single(16, 2))(2) - 0.5) < 1e-15);
  CHECK(std::abs(apply_wave_cosine(p0, oracle::pi, single(16, 1))(1) + 1.0) < 1e-15);
  CHECK(apply_wave_cosine(p0, 2.0, z)(0) == 2.0);

  const PropagatorParams p{1.0, 1.5, 0.3};
  const SpectralField g8 = to_field(oracle::random_coeffs(32, 8, 3, true), true);
  const double dt = 1e-6;
  for (double t : {0.2, 1.1}) {
    const SpectralField fd =
        (apply_wave_sine(p, t + dt, g8) - apply_wave_sine(p, t - dt, g8)) * (0.5 / dt);
    CHECK(max_diff(fd, apply_wave_cosine(p, t, g8)) < 1e-6);
    const SpectralField fc =
        (apply_wave_cosine(p, t + dt, g8) - apply_wave_cosine(p, t - dt, g8)) * (0.5 / dt);
    CHECK(max_diff(fc, apply_wave_cosine_rate(p, t, g8)) < 1e-5);
  }
}

TEST_CASE("property: free wave pair solves the linear wave equation") {
  const PropagatorParams p{1.0, 1.3, 0.4};
  const SpectralField n0 = to_field(oracle::random_coeffs(32, 12, 3, true), true);
  const SpectralField n1 = to_field(oracle::random_coeffs(32, 12, 4, true), true);
  auto n = [&](double t) { return wave_flow(p, t, n0, n1).n; };
  const double t = 0.6, h = 1e-4;
  const SpectralField ntt = (n(t + h) - n(t) * 2.0 + n(t - h)) * (1.0 / (h * h));
  const SpectralField nt = n(t);
  // beta^{-2} n_tt + k^2 n + eps^2 k^4 n = 0 mode by mode
  double worst = 0.0, scale = 0.0;
  for (int k = -16; k <= 15; ++k) {
    const double kk = double(k) * k;
    const cplx r = ntt(k) / (p.beta * p.beta) + (kk + p.eps * p.eps * kk * kk) * nt(k);
    worst = std::max(worst, std::abs(r));
    scale = std::max(scale, std::abs(ntt(k)));
  }
  CHECK(worst < 1e-4 * scale);
  const WavePair w = wave_flow(p, t, n0, n1);
  const SpectralField nd = (n(t + h) - n(t - h)) * (0.5 / h);
  CHECK(max_diff(nd, w.dn) < 1e-2);
}

TEST_CASE("homogeneous estimates") {
  const PropagatorParams p{1.0, 0.8, 0.5};
  for (int trial = 0; trial < 10; ++trial) {
    const SpectralField f = to_field(oracle::random_coeffs(64, 31, 200 + trial, true), true);
    for (double t : {0.0, 0.5, 2.0, 7.0, 10.0}) {
      for (double l : {-1.0, 0.0, 1.0}) {
        CHECK(sobolev_norm(apply_wave_cosine(p, t, f), l) <= sobolev_norm(f, l) * (1 + 1e-14));
        const double ratio = sobolev_norm(apply_wave_sine(p, t, f), l) /
                             ((t + 1.0 / (p.beta * p.eps)) * sobolev_norm(f, l - 2.0));
        // |sin(wt)/w| <= min(t, 1/(beta eps k^2)) and <k>^2 <= 2k^2 for k != 0
        CHECK(ratio <= 2.0);
      }
    }
  }
}

TEST_CASE("Duhamel constant") {
  CHECK(duhamel_constant(0.0, {1.0, 2.0, 0.5}) == doctest::Approx(1.0));
  CHECK(duhamel_constant(1.0, {1.0, 4.0, 0.0}) == doctest::Approx(0.25));
  CHECK_THROWS_AS(duhamel_constant(0.5, {1.0, 1.0, 0.0}), Error);
  CHECK_THROWS_AS(duhamel_constant(1.5, {1.0, 1.0, 1.0}), Error);
  const PropagatorParams p{1.0, 3.0, 0.7};
  double prev_gap = 1.0;
  for (int j = 4; j <= 40; j += 4) {
    const double gap = std::abs(duhamel_constant(1.0 - std::ldexp(1.0, -j), p) - 1.0 / 3.0);
    CHECK(gap <= prev_gap);
    prev_gap = gap;
  }
  CHECK(prev_gap < 1e-9);
  // closed form at rho = 1/2: ((1/2)/(1/2 eps^2))^{1/4} / (beta sqrt 2)
  CHECK(duhamel_constant(0.5, p) == doctest::Approx(std::pow(1.0 / 0.49, 0.25) / (3.0 * std::sqrt(2.0))));
}
