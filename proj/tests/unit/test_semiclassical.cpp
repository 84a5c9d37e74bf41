#include <doctest.h>

#include <cmath>

#include "qzs/error.hpp"
#include "qzs/initial_data.hpp"
#include "qzs/semiclassical.hpp"

using namespace qzs;

namespace {

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> t(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) t[std::size_t(i)] = a + (b - a) * i / (n - 1);
  return t;
}

double period(long N, double eps, double eps0) {
  return 2.0 * M_PI / (std::abs(eps * eps - eps0 * eps0) * std::pow(double(N), 4));
}

}  // namespace

TEST_CASE("single mode gap matches the phase formula") {
  const long N = 5;
  const double eps = 0.3, eps0 = 0.1;
  const std::vector<double> t = linspace(0.0, 0.7, 301);
  double want = 0.0;
  for (double s : t)
    want = std::max(want, 2.0 * std::abs(std::sin(0.5 * s * (eps * eps - eps0 * eps0) * std::pow(N, 4))));
  CHECK(discontinuity_demo(N, eps, eps0, 0.0, t).value == doctest::Approx(want).epsilon(1e-12));
}

TEST_CASE("discontinuity reaches two over one period") {
  for (long N : {8L, -8L, 3L}) {
    for (double s : {0.0, 1.5, -1.0}) {
      const DiscontinuityResult r = discontinuity_demo(N, 0.1, 0.0, s, linspace(0.0, period(N, 0.1, 0.0), 4001));
      CHECK(r.value >= 1.999);
      CHECK(r.value <= 2.0 + 1e-12);
      CHECK_FALSE(r.warning);
    }
  }
  CHECK(discontinuity_demo(8, 0.1, 0.1, 0.0, linspace(0.0, 10.0, 11)).value == 0.0);
  const DiscontinuityResult short_run = discontinuity_demo(8, 0.1, 0.0, 0.0, linspace(0.0, 0.1, 11));
  CHECK(short_run.warning);
  CHECK_THROWS_AS(discontinuity_demo(0, 0.1, 0.0, 0.0, {0.0}), Error);
  CHECK_THROWS_AS(discontinuity_demo(8, 0.1, 0.0, 0.0, {}), Error);
}

TEST_CASE("eps to zero on smooth data") {
  const TorusGrid g(128);
  const PropagatorParams p{1.0, 1.0, 0.0};
  SolverConfig cfg;
  cfg.dt = 1e-3;
  cfg.record_stride = 10;
  const std::vector<double> eps{0.4, 0.2, 0.1, 0.05};
  const SemiclassicalResult r = semiclassical_experiment(
      [&](double) { return smooth_reference_data(g); }, eps, p, 1.0, 4.0, cfg, 4);
  REQUIRE(r.rows.size() == eps.size());
  for (std::size_t i = 1; i < r.rows.size(); ++i) CHECK(r.rows[i].error < r.rows[i - 1].error);
  CHECK(r.rows.back().error < 0.1 * r.rows.front().error);
  double lo = INFINITY, hi = 0.0;
  for (const SemiclassicalRow& row : r.rows) {
    lo = std::min(lo, row.h10_bound);
    hi = std::max(hi, row.h10_bound);
  }
  CHECK(hi - lo < 0.1 * lo);
  CHECK(r.fitted_rate > 0.5);
}

TEST_CASE("eps list validation") {
  const TorusGrid g(16);
  const auto fam = [&](double) { return smooth_reference_data(g); };
  SolverConfig cfg;
  cfg.dt = 1e-2;
  CHECK_THROWS_AS(semiclassical_experiment(fam, {}, {}, 0.1, 4.0, cfg), Error);
  CHECK_THROWS_AS(semiclassical_experiment(fam, {0.1, 0.2}, {}, 0.1, 4.0, cfg), Error);
  CHECK_THROWS_AS(semiclassical_experiment(fam, {0.1, -0.1}, {}, 0.1, 4.0, cfg), Error);
  const SemiclassicalResult one = semiclassical_experiment(fam, {0.2}, {}, 0.1, 4.0, cfg);
  CHECK(std::isnan(one.fitted_rate));
  const SemiclassicalResult z = semiclassical_experiment(fam, {0.2, 0.0}, {}, 0.1, 4.0, cfg);
  CHECK(z.rows.back().error == 0.0);
}
