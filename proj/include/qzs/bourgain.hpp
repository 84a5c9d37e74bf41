#pragma once

#include <map>
#include <span>
#include <vector>

#include "qzs/propagators.hpp"
#include "qzs/solver.hpp"
#include "qzs/spectral_field.hpp"

namespace qzs {

/// Contiguous run of lattice values tau_j = j * dtau, j = j0, j0+1, ...
struct TauSegment {
  long j0 = 0;
  std::vector<cplx> values;

  long j_end() const { return j0 + static_cast<long>(values.size()); }
};

/// Spacetime Fourier coefficients f^(k, tau) = (1/4pi^2) int int f
/// e^{-i(kx + tau t)} dx dt on the lattice Z x dtau Z. Each frequency holds a
/// list of disjoint segments sorted by j0; everything else is zero.
class SpacetimeField {
 public:
  SpacetimeField(TorusGrid grid, double dtau);

  const TorusGrid& grid() const noexcept { return grid_; }
  double dtau() const noexcept { return dtau_; }
  const std::map<int, std::vector<TauSegment>>& segments() const noexcept {
    return segments_;
  }

  /// Add values at lattice indices j0, j0+1, ... of frequency k (which must
  /// lie on the grid), merging with any segment they touch.
  void add(int k, long j0, std::span<const cplx> values);

  cplx value(int k, long j) const;
  double tau(long j) const { return dtau_ * static_cast<double>(j); }

  /// Largest |tau| of any stored node.
  double tau_extent() const;
  bool empty() const { return segments_.empty(); }

 private:
  TorusGrid grid_;
  double dtau_;
  std::map<int, std::vector<TauSegment>> segments_;
};

enum class DispersionKind { schrodinger, wave };

struct WeightKind {
  DispersionKind kind = DispersionKind::schrodinger;
  PropagatorParams params{};

  /// <tau + alpha k^2 + eps^2 k^4> or <|tau| - beta |k| <eps k>>
  double operator()(int k, double tau) const;
};

struct NormResult {
  double value = 0.0;
  /// Share of the (weighted) norm carried by the outer half of each stored
  /// tau segment.
  double tail_fraction = 0.0;
  bool truncated = false;
};

inline constexpr double kTailWarningThreshold = 1e-6;

struct TransformOptions {
  bool cutoff = false;
  /// Samples are multiplied by psi(t / cutoff_scale) when cutoff is set.
  double cutoff_scale = 1.0;
};

/// Discrete transform in time of samples at uniform times. The sample count
/// must be odd; dtau = 2pi / (count * dt) and tau = 0 is a lattice node.
SpacetimeField spacetime_transform(std::span<const SpectralField> samples,
                                   std::span<const double> times,
                                   const TransformOptions& options = {});
SpacetimeField spacetime_transform(const Trajectory& trajectory, const SpectralField QZSState::*field,
                                   const TransformOptions& options = {});

/// sum_k sum_j dtau <k>^{2r} w^{2b} |c|^2, square root
NormResult xsb_norm(const SpacetimeField& f, double r, double b, const WeightKind& w);
/// X^{r,1/2} plus the l^2_k of <k>^r sum_j dtau |c|
NormResult y_norm(const SpacetimeField& f, double r, const WeightKind& w);
/// X^{r,-1/2} plus the l^2_k of <k>^r sum_j dtau |c| / w
NormResult z_norm(const SpacetimeField& f, double r, const WeightKind& w);

/// Exact lattice convolution in (k, tau): no frequency wraps around. The
/// result lives on a grid twice as large.
SpacetimeField product(const SpacetimeField& a, const SpacetimeField& b);

/// Coefficients of the complex conjugate: conj(c(-k, -tau)).
SpacetimeField conjugate(const SpacetimeField& f);

/// Multiply by |k|^rho (zero at k = 0).
SpacetimeField apply_d_rho(const SpacetimeField& f, double rho);

/// sup over sample times of ||f(t)||_{H^r}, using the discrete inverse.
double sup_time_sobolev(const SpacetimeField& f, double r, std::span<const double> times);

}  // namespace qzs
