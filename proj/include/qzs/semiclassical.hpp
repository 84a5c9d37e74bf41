#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qzs/solver.hpp"

namespace qzs {

struct SemiclassicalRow {
  double eps = 0.0;
  /// sup_t ||du||_{H^{s-2}} + ||dn||_{H^{s-3}} + ||d(dn)||_{H^{s-4}} against eps = 0
  double error = 0.0;
  /// sup_t ||u||_{H^1} + ||n||_{L^2} + ||dn||_{H^{-1}}
  double h10_bound = 0.0;
};

struct SemiclassicalResult {
  std::vector<SemiclassicalRow> rows;
  /// Least-squares slope of log(error) against log(eps) over rows with eps > 0
  /// and error > 0; NaN when fewer than two such rows exist.
  double fitted_rate = 0.0;
  double fit_residual = 0.0;
};

using DataFamily = std::function<InitialData(double eps)>;

/// Solve for every eps in eps_list and for eps = 0 with the same alpha, beta
/// and compare. eps_list must be strictly decreasing and nonnegative.
SemiclassicalResult semiclassical_experiment(const DataFamily& family,
                                             const std::vector<double>& eps_list,
                                             const PropagatorParams& params, double T, double s,
                                             const SolverConfig& config, int threads = 1);

struct DiscontinuityResult {
  double value = 0.0;
  std::optional<std::string> warning;
};

/// max over t_grid of the H^s distance between the normalized single-mode
/// solutions for eps and eps0 (alpha = 1). The warning is set when t_grid
/// spans less than one period 2pi/(|eps^2 - eps0^2| N^4).
DiscontinuityResult discontinuity_demo(long N, double eps, double eps0, double s,
                                       const std::vector<double>& t_grid);

}  // namespace qzs
