#pragma once

#include <vector>

#include "qzs/propagators.hpp"
#include "qzs/solver.hpp"
#include "qzs/state.hpp"

namespace qzs {

/// Summands of the energy, each with the (1/2pi) normalization.
struct EnergyTerms {
  double kinetic = 0.0;          // alpha ||u_x||^2
  double dispersion = 0.0;       // eps^2 ||u_xx||^2
  double potential = 0.0;        // 1/2 ||n||^2
  double wave_kinetic = 0.0;     // (2 beta^2)^{-1} ||dn||^2 in homogeneous H^{-1}
  double wave_dispersion = 0.0;  // eps^2/2 ||n_x||^2
  double interaction = 0.0;      // (1/2pi) int n |u|^2

  double sum() const {
    return kinetic + dispersion + potential + wave_kinetic + wave_dispersion + interaction;
  }
};

struct ConservedQuantities {
  double time = 0.0;
  double mass = 0.0;
  double energy = 0.0;
  EnergyTerms terms;
};

double mass(const QZSState& state);

/// n and dn must have zero mean (gauge first).
ConservedQuantities energy(const QZSState& state, const PropagatorParams& params);

/// (1/2pi) int n |u|^2 by the trapezoid rule on the grid.
double interaction_integral(const SpectralField& u, const SpectralField& n);

/// ||f||_{L^4}^4 / (||f_x|| ||f||^3), with the L^4 norm computed without
/// aliasing. Fields with f_x = 0 are not-applicable.
double gn_l4_ratio(const SpectralField& f);

/// ||f||_{L^4}^4 computed exactly for a band-limited field.
double l4_norm_pow4(const SpectralField& f);

/// Constant G in ||f||_{L^4}^4 <= ||f||^4 + G ||f_x|| ||f||^3, valid for every
/// f on the torus.
inline constexpr double kInhomogeneousGnConstant = 2.0 * 3.141592653589793;

struct EnergyBound {
  double lhs = 0.0;
  double rhs = 0.0;
  double constant = 0.0;
};

/// lhs = |(1/2pi) int n|u|^2|, rhs = ||n||^2/4 + eps^2/2 ||u_x||^2 + C with
/// C = m^2 + G^2 m^3 / (2 eps^2), m = ||u||^2. Requires eps > 0.
EnergyBound nonlinear_energy_bound(const QZSState& state, const PropagatorParams& params);

struct RateSample {
  double time = 0.0;
  double lhs_rate = 0.0;
  double rhs_bound = 0.0;
};

/// Centered-difference rate of 1/2 (beta^{-2}||dn||_{H^a}^2 + ||n_x||_{H^a}^2
/// + eps^2 ||n_xx||_{H^a}^2) against ||dn||_{H^a}^2 + ||u||_{H^{a+2}}^2, at
/// interior snapshots.
std::vector<RateSample> wave_energy_rate(const Trajectory& trajectory, double a,
                                         const PropagatorParams& params);

/// d/dt u recovered from the Schrodinger equation:
/// i(alpha u_xx - eps^2 u_xxxx - u n), with the product taken exactly.
SpectralField schrodinger_time_derivative(const QZSState& state, const PropagatorParams& params);

/// Centered-difference rate of 1/2 ||u_t||_{H^b}^2 against
/// ||u_t||_{H^b} (||u_t n||_{H^b} + ||u n_t||_{H^b}), with u_t from
/// schrodinger_time_derivative, at interior snapshots.
std::vector<RateSample> ut_energy_rate(const Trajectory& trajectory, double b,
                                       const PropagatorParams& params);

/// ||fg||_{H^s} / (||f||_{H^{1/2+delta}} ||g||_{H^s}) for s in [-1/2, 1/2].
double product_inequality_ratio(const SpectralField& f, const SpectralField& g, double s,
                                double delta = 0.01);

}  // namespace qzs
