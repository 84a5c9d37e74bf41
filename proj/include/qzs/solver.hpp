#pragma once

#include <utility>
#include <vector>

#include "qzs/error.hpp"
#include "qzs/propagators.hpp"
#include "qzs/state.hpp"

namespace qzs {

enum class Scheme { picard, strang };
enum class Quadrature { trapezoid, midpoint };

struct SolverConfig {
  double dt = 1e-3;
  Scheme scheme = Scheme::strang;
  double picard_tol = 1e-12;
  int picard_maxiter = 50;
  bool dealias = true;
  Quadrature quadrature = Quadrature::midpoint;
  /// Keep every record_stride-th step in the trajectory (the final state is
  /// always kept).
  int record_stride = 1;

  void validate() const;
};

using Trajectory = std::vector<QZSState>;

/// Raised when a step produces non-finite or overflowing coefficients.
class BlowUpDetected : public Error {
 public:
  BlowUpDetected(double last_finite_time, Trajectory partial);

  double last_finite_time() const noexcept { return last_finite_time_; }
  const Trajectory& partial() const noexcept { return partial_; }

 private:
  double last_finite_time_;
  Trajectory partial_;
};

/// One step of the Duhamel fixed point over [t, t+h]. The state must be in
/// gauged (mean-zero) variables.
QZSState picard_step(const QZSState& state, const PropagatorParams& params,
                     const SolverConfig& config, double h);

/// Half linear flow, exact nonlinear flow (u -> u e^{-ihn},
/// dn -> dn + h beta^2 (|u|^2)_xx), half linear flow.
QZSState strang_step(const QZSState& state, const PropagatorParams& params,
                     const SolverConfig& config, double h);

QZSState step(const QZSState& state, const PropagatorParams& params,
              const SolverConfig& config, double h);

/// Gauge, integrate to time T, ungauge. Snapshots every config.dt (times a
/// stride), starting with the initial state.
Trajectory solve(const InitialData& data, const PropagatorParams& params, double T,
                 const SolverConfig& config);

/// L^2 residuals of the Schrodinger and wave equations at the middle of three
/// equally spaced states. Time derivatives are centered differences taken in
/// the interaction picture (after undoing the free flows), so free solutions
/// give zero residual. The wave residual adds the consistency of dn with n
/// and beta^{-2} times the mismatch in d/dt dn.
std::pair<double, double> rhs_residual(const QZSState& prev, const QZSState& cur,
                                       const QZSState& next, const PropagatorParams& params);

/// False if any coefficient is non-finite or exceeds limit in modulus.
bool state_is_finite(const QZSState& state, double limit = 1e150);

}  // namespace qzs
