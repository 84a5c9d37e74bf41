#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qzs/bourgain.hpp"
#include "qzs/estimates.hpp"

namespace qzs {

struct EstimateReport {
  std::string description;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
  std::vector<double> N_values;
  std::vector<double> ratios;
  double fitted_exponent = 0.0;
  double fit_residual = 0.0;
};

/// lhs = ||un||_{X_S^{s,-1/2}},
/// rhs = ||u||_{X_S^{s,b}} ||n||_{X_W^{l,1/2}} + ||u||_{X_S^{s,1/2}} ||n||_{X_W^{l,b}}.
EstimateReport bilinear_ratio_schrodinger(const SpacetimeField& u, const SpacetimeField& n,
                                          const ExponentPoint& point, const PropagatorParams& p);

/// lhs = ||D^rho(u conj(v))||_{X_W^{l,-1/2}},
/// rhs = ||u||_{X_S^{s,b}} ||v||_{X_S^{s,1/2}} + ||u||_{X_S^{s,1/2}} ||v||_{X_S^{s,b}}.
EstimateReport bilinear_ratio_wave(const SpacetimeField& u, const SpacetimeField& v,
                                   const ExponentPoint& point, const PropagatorParams& p);

enum class FamilyMember { u, n, v };

/// Default bump for the counterexamples: phi(tau) = eta(2 tau), supported
/// in |tau| <= 1.
double counterexample_bump(double tau);

/// Support half-width of counterexample_bump.
inline constexpr double kCounterexampleBumpRadius = 1.0;

/// The fields u_1..u_8, n_1..n_4, v_5..v_8: a Kronecker delta in k times a
/// shifted copy of phi in tau, sampled on the lattice dtau Z.
SpacetimeField counterexample_family(int index, FamilyMember which, long N,
                                     const PropagatorParams& p, double dtau,
                                     const std::function<double(double)>& phi = counterexample_bump,
                                     double phi_radius = kCounterexampleBumpRadius);

/// Smallest power-of-two grid containing every frequency used by the
/// families for this N.
TorusGrid counterexample_grid(long N);

struct NecessityConfig {
  double dtau = 1.0 / 16.0;
  double bounded_threshold = 0.05;
  double violation_threshold = 0.1;
};

/// Ratio ||un||_{X_S^{s,b-1}} / (||u||_{X_S^{s,b}} ||n||_{X_W^{l,b}}) for
/// pairs 1..4, or ||D^rho(u conj v)||_{X_W^{l,b-1}} / (||u||_{X_S^{s,b}}
/// ||v||_{X_S^{s,b}}) for pairs 5..8, on every N, with the log-log slope.
EstimateReport necessity_scan(int pair_index, const ExponentPoint& point,
                              const PropagatorParams& p, const std::vector<long>& N_list,
                              const NecessityConfig& config = {});

struct CorpusConfig {
  int draws = 200;
  int grid_size = 32;
  double dtau = 0.125;
  /// Largest |k| carrying a bump.
  long k_max = 6;
  int max_modes = 3;
  double max_offset = 3.0;
};

struct CorpusResult {
  std::vector<EstimateReport> schrodinger;
  std::vector<EstimateReport> wave;
  double max_schrodinger = 0.0;
  double max_wave = 0.0;
};

/// Seeded random corpus: every field is a sum of a few bumps in tau placed
/// near the relevant dispersion surfaces, with random complex amplitudes.
CorpusResult bilinear_corpus(std::uint64_t seed, const ExponentPoint& point,
                             const PropagatorParams& p, const CorpusConfig& config = {},
                             int threads = 1);

}  // namespace qzs
