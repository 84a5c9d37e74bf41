#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qzs/propagators.hpp"

namespace qzs {

struct ExponentPoint {
  double s = 0.0;
  double l = 0.0;
  double b = 0.49;
  double rho = 0.5;
};

struct RegionMembership {
  bool in_omega_l = false;
  bool in_omega_g = false;
};

/// Omega_L = {s >= 0, -1 <= l < 2s+1, -2 < s-l <= 2};
/// Omega_G = {0 <= s-l <= 2, s+l >= 4} together with the point (2,1).
RegionMembership region_membership(double s, double l);

/// h(k,k1) = (k+k1)(alpha + eps^2(k^2+k1^2)) - sign beta <eps(k-k1)>, where
/// sign = +1 pairs with tau2 + beta k2 <eps k2> in the resonance identity.
double h_weight(long k, long k1, int sign, const PropagatorParams& p);

struct ResonanceCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  /// max(|tau+S(k)|, |tau1+S(k1)|, ||tau2| - W(k2)|)
  double max_of_three = 0.0;
  /// |k-k1||h|/3 with the sign fixed by tau2 and k2
  double lower_bound = 0.0;
};

/// lhs = (tau+S(k)) - (tau1+S(k1)) - (tau2 + sign beta k2 <eps k2>) with
/// k2 = k-k1, tau2 = tau-tau1; rhs = (k-k1) h(k,k1). S(k) = alpha k^2 +
/// eps^2 k^4.
ResonanceCheck resonance_identity(long k, long k1, double tau, double tau1, int sign,
                                  const PropagatorParams& p);

/// Sign for which tau2 + sign beta k2 <eps k2> = +-(|tau2| - beta|k2|<eps k2>).
int resonance_sign(long k2, double tau2);

struct SigmaResult {
  double value = 0.0;  // truncated sum plus tail bound
  double truncated = 0.0;
  double tail_bound = 0.0;
};

/// sum over k1 != k, |k1| <= K_max and both signs of
/// <eps^2 k1^4 + alpha k1^2 + tau +- beta(k-k1)<eps(k-k1)>>^{-e1}, plus an
/// integral bound for |k1| > K_max.
SigmaResult sigma1(long k, double tau, double e1, long K_max, const PropagatorParams& p);

/// sum over |k1| <= K_max of <p(k1)>^{-e2} with the cubic
/// p(x) = x^3 - (3k/2)x^2 + (alpha + 2eps^2k^2)/(2eps^2) x
///        + (tau - alpha k^2 - eps^2 k^4)/(4 eps^2 k), plus a tail bound.
SigmaResult sigma2(long k, double tau, double e2, long K_max, const PropagatorParams& p);

double sigma2_cubic(long k, double tau, double x, const PropagatorParams& p);

/// Number of k1 in [-K_max, K_max] with |p(k1)| < 1.
int sigma2_near_zero_count(long k, double tau, long K_max, const PropagatorParams& p);

struct HScanResult {
  long C1 = 0;
  double C_threshold = 0.0;
  double c_measured = 0.0;
  double c4_measured = 0.0;
  /// Smallest |k| used for c4: max(C, 10 max(1/eps, sqrt(beta/eps))).
  double c4_region_start = 0.0;
};

/// C1 = smallest integer with beta<eps k> < |k|(alpha + eps^2 k^2) for every
/// C1 <= |k| <= K_scan. C = max(C1, sqrt(3 sqrt2 beta/eps), 1/(3 eps)).
/// c = inf |h|/|k-k1| over {|k| >= C} u {|k1| >= C}, k != k1;
/// c4 = inf |k-k1||h|/|k|^4 over |k| >= 2|k1| and |k| >= c4_region_start.
/// Both sign branches are scanned.
HScanResult h_lower_bound_scan(const PropagatorParams& p, long K_scan);

long brute_force_C1(const PropagatorParams& p, long K_scan);

enum class CaseQuantity { I, II, III, IV, V };

const char* to_string(CaseQuantity q);

/// Throws hypothesis_violation naming the failed clause of
/// s >= 0, -1 <= l <= 2s+1-rho, -2+rho <= s-l <= 2, 1/6 < b <= 1/2,
/// 0 < rho <= 1.
void check_bilinear_hypotheses(const ExponentPoint& point);

/// <a>^{-gamma} phi_delta(a), the closed form of the tau integral.
double tau_kernel(double delta, double gamma, double a);

struct TauSampling {
  /// Outer frequencies |k| <= k_outer.
  long k_outer = 32;
  /// Offsets added to the anchor tau on the relevant dispersion surface.
  std::vector<double> offsets{0.0, 0.5, -0.5, 2.0, -2.0, 10.0, -10.0, 100.0, -100.0,
                              1e3, -1e3, 1e4, -1e4};
};

struct CaseQuantityResult {
  double sup = 0.0;
  long arg_k = 0;
  double arg_tau = 0.0;
};

/// Truncated supremum of the named quantity. Inner sums run over
/// |k1| <= K_max and only keep terms for which the case condition (the named
/// weight is the largest of the three) is compatible with the resonance lower
/// bound. IV and V sum over k != 0 only.
CaseQuantityResult case_quantity_sup(CaseQuantity which, const ExponentPoint& point,
                                     const PropagatorParams& p, long K_max,
                                     const TauSampling& sampling = {}, int threads = 1);

struct SigmaSample {
  long k = 0;
  double tau = 0.0;
};

/// Seeded (k, tau) points with 0 < |k| <= k_range and tau near -S(j) for a
/// random |j| <= k_range, offset uniformly by at most 2.
std::vector<SigmaSample> sigma_samples(std::uint64_t seed, int count, long k_range,
                                       const PropagatorParams& p);

struct SigmaRow {
  SigmaSample at;
  SigmaResult s1;
  SigmaResult s2;
};

std::vector<SigmaRow> sigma_scan(const std::vector<SigmaSample>& samples, double e1, double e2,
                                 long K_max, const PropagatorParams& p, int threads = 1);

struct ResonanceSurvey {
  int draws = 0;
  /// max |lhs - rhs| / (1 + |lhs|)
  double max_defect = 0.0;
  /// draws with max_of_three < lower_bound
  int bound_failures = 0;
};

/// Random k, k1 in [-k_range, k_range] and tau, tau1 in [-tau_range, tau_range],
/// both signs in the identity and the tau2-matched sign in the bound.
ResonanceSurvey resonance_survey(std::uint64_t seed, int draws, long k_range, double tau_range,
                                 const PropagatorParams& p);

}  // namespace qzs
