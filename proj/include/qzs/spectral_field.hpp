#pragma once

#include <complex>
#include <span>
#include <vector>

#include "qzs/grid.hpp"
#include "qzs/math.hpp"

namespace qzs {

enum class Realness { complex, real };
enum class Homogeneity { inhomogeneous, homogeneous };

/// Fourier coefficients f^(k) = (1/2pi) int f(x) e^{-ikx} dx of a single
/// field on a TorusGrid.
class SpectralField {
 public:
  explicit SpectralField(TorusGrid grid, Realness realness = Realness::complex);

  const TorusGrid& grid() const noexcept { return grid_; }
  Realness realness() const noexcept { return realness_; }
  bool is_real() const noexcept { return realness_ == Realness::real; }
  void set_realness(Realness r) noexcept { realness_ = r; }

  cplx& operator()(int k) { return coeffs_[grid_.index(k)]; }
  const cplx& operator()(int k) const { return coeffs_[grid_.index(k)]; }

  /// Coefficient at k, or zero when k is outside the grid.
  cplx value_or_zero(long k) const;

  /// Raw storage in FFT order.
  std::span<cplx> data() noexcept { return coeffs_; }
  std::span<const cplx> data() const noexcept { return coeffs_; }

  double mean() const { return (*this)(0).real(); }

  /// Multiply every coefficient by m(k).
  template <class Multiplier>
  SpectralField& apply(Multiplier&& m) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      coeffs_[i] *= m(grid_.frequency(i));
    return *this;
  }

  /// Largest relative violation of c(-k) = conj(c(k)); the -M/2 mode must be
  /// real since its partner lies off the grid.
  double conjugate_symmetry_defect() const;

  /// Project onto conjugate-symmetric coefficients and flag the field real.
  SpectralField& enforce_real();

  SpectralField& operator+=(const SpectralField& o);
  SpectralField& operator-=(const SpectralField& o);
  SpectralField& operator*=(cplx a);
  SpectralField& operator*=(double a);

  friend SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
  friend SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
  friend SpectralField operator*(SpectralField a, cplx s) { return a *= s; }
  friend SpectralField operator*(cplx s, SpectralField a) { return a *= s; }
  friend SpectralField operator*(SpectralField a, double s) { return a *= s; }
  friend SpectralField operator*(double s, SpectralField a) { return a *= s; }

 private:
  TorusGrid grid_;
  Realness realness_;
  std::vector<cplx> coeffs_;
};

/// M-point trapezoid approximation of the Fourier coefficients; exact for
/// trigonometric polynomials of degree < M/2.
SpectralField fft_forward(const TorusGrid& grid, std::span<const cplx> samples);
SpectralField fft_forward_real(const TorusGrid& grid, std::span<const double> samples);

/// samples(x_j) = sum_k c(k) e^{ik x_j}
std::vector<cplx> fft_inverse(const SpectralField& field);
std::vector<double> fft_inverse_real(const SpectralField& field);

/// Inhomogeneous: (sum <k>^{2s}|c(k)|^2)^{1/2}. Homogeneous: |k|^{2s}, k = 0
/// omitted. A homogeneous norm with s < 0 of a field with nonzero mean throws
/// mean_zero_violation.
double sobolev_norm(const SpectralField& field, double s,
                    Homogeneity h = Homogeneity::inhomogeneous);

/// l^2 norm of the coefficients (the L^2 norm under the (1/2pi) convention).
double l2_norm(const SpectralField& field);

/// Zero every mode with |k| > M/3.
SpectralField dealias(SpectralField field);

/// Multiply by (ik)^order.
SpectralField derivative(SpectralField field, int order);

/// Copy onto another grid, truncating or zero-padding in frequency.
SpectralField resample(const SpectralField& field, const TorusGrid& target);

/// Exact product of two band-limited fields, evaluated on a grid of twice the
/// size so that no aliasing occurs.
SpectralField exact_product(const SpectralField& a, const SpectralField& b);

/// Coefficients of the complex conjugate: c(k) -> conj(c(-k)), indices taken
/// modulo M.
SpectralField conjugate(const SpectralField& field);

/// Grid-pointwise |f|^2, optionally with every mode above M/3 removed.
SpectralField modulus_squared(const SpectralField& field, bool dealiased);

/// (1/2pi) int f(x) dx by the trapezoid rule on the grid nodes.
double grid_mean(std::span<const double> samples);

}  // namespace qzs
