#include "qzs/semiclassical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qzs/fit.hpp"
#include "qzs/parallel.hpp"

namespace qzs {
namespace {

double h10_norm(const QZSState& s) {
  return sobolev_norm(s.u, 1.0) + l2_norm(s.n) + sobolev_norm(s.dn, -1.0);
}

double gap(const QZSState& a, const QZSState& b, double s) {
  return sobolev_norm(a.u - b.u, s - 2.0) + sobolev_norm(a.n - b.n, s - 3.0) +
         sobolev_norm(a.dn - b.dn, s - 4.0);
}

}  // namespace

SemiclassicalResult semiclassical_experiment(const DataFamily& family,
                                             const std::vector<double>& eps_list,
                                             const PropagatorParams& params, double T, double s,
                                             const SolverConfig& config, int threads) {
  if (eps_list.empty()) throw Error(ErrorKind::insufficient_data, "eps list is empty");
  for (std::size_t i = 0; i < eps_list.size(); ++i) {
    if (!(eps_list[i] >= 0.0)) throw Error(ErrorKind::domain, "eps values must be nonnegative");
    if (i > 0 && !(eps_list[i] < eps_list[i - 1]))
      throw Error(ErrorKind::input, "eps list must be strictly decreasing");
  }

  // Slot 0 holds the classical reference, eps = 0.
  std::vector<double> all{0.0};
  all.insert(all.end(), eps_list.begin(), eps_list.end());
  std::vector<Trajectory> runs(all.size());
  parallel_for(all.size(), threads, [&](std::size_t i) {
    if (i > 0 && all[i] == 0.0) return;
    PropagatorParams p = params;
    p.eps = all[i];
    runs[i] = solve(family(all[i]), p, T, config);
  });

  const Trajectory& ref = runs[0];
  SemiclassicalResult res;
  std::vector<double> lx, ly;
  for (std::size_t i = 1; i < all.size(); ++i) {
    const Trajectory& run = all[i] == 0.0 ? ref : runs[i];
    SemiclassicalRow row{all[i], 0.0, 0.0};
    for (std::size_t j = 0; j < run.size(); ++j) {
      row.error = std::max(row.error, gap(run[j], ref[j], s));
      row.h10_bound = std::max(row.h10_bound, h10_norm(run[j]));
    }
    if (row.eps > 0.0 && row.error > 0.0) {
      lx.push_back(std::log(row.eps));
      ly.push_back(std::log(row.error));
    }
    res.rows.push_back(row);
  }
  if (lx.size() >= 2) {
    const LineFit f = fit_line(lx, ly);
    res.fitted_rate = f.slope;
    res.fit_residual = f.rms_residual;
  } else {
    res.fitted_rate = std::numeric_limits<double>::quiet_NaN();
    res.fit_residual = std::numeric_limits<double>::quiet_NaN();
  }
  return res;
}

DiscontinuityResult discontinuity_demo(long N, double eps, double eps0, double s,
                                       const std::vector<double>& t_grid) {
  if (N == 0) throw Error(ErrorKind::domain, "N must be nonzero");
  if (t_grid.empty()) throw Error(ErrorKind::insufficient_data, "empty time grid");
  int M = 8;
  while (!TorusGrid(M).contains(N) || !TorusGrid(M).contains(-N)) M *= 2;
  const TorusGrid grid(M);
  const int k = static_cast<int>(N);
  const double k2 = double(N) * double(N);
  const double amp = std::pow(bracket(double(N)), -s);

  DiscontinuityResult r;
  for (double t : t_grid) {
    SpectralField a(grid), b(grid);
    a(k) = amp * std::polar(1.0, -t * (k2 + eps * eps * k2 * k2));
    b(k) = amp * std::polar(1.0, -t * (k2 + eps0 * eps0 * k2 * k2));
    r.value = std::max(r.value, sobolev_norm(a - b, s));
  }
  const double rate = std::abs(eps * eps - eps0 * eps0) * k2 * k2;
  if (rate > 0.0) {
    const auto [lo, hi] = std::minmax_element(t_grid.begin(), t_grid.end());
    const double period = 2.0 * kPi / rate;
    if (*hi - *lo < period)
      r.warning = "time grid spans " + std::to_string(*hi - *lo) +
                  ", less than one period " + std::to_string(period);
  }
  return r;
}

}  // namespace qzs
