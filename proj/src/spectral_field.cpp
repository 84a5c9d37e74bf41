#include "qzs/spectral_field.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fft_backend.hpp"
#include "qzs/error.hpp"

namespace qzs {

SpectralField::SpectralField(TorusGrid grid, Realness realness)
    : grid_(grid), realness_(realness), coeffs_(grid.size()) {}

cplx SpectralField::value_or_zero(long k) const {
  if (!grid_.contains(k)) return {};
  return coeffs_[grid_.index(static_cast<int>(k))];
}

double SpectralField::conjugate_symmetry_defect() const {
  double scale = 0.0;
  for (const cplx& c : coeffs_) scale = std::max(scale, std::abs(c));
  if (scale == 0.0) return 0.0;
  double defect = std::abs((*this)(grid_.min_frequency()).imag());
  for (int k = 0; k <= grid_.max_frequency(); ++k)
    defect = std::max(defect, std::abs((*this)(k) - std::conj((*this)(-k))));
  return defect / scale;
}

SpectralField& SpectralField::enforce_real() {
  for (int k = 1; k <= grid_.max_frequency(); ++k) {
    const cplx avg = 0.5 * ((*this)(k) + std::conj((*this)(-k)));
    (*this)(k) = avg;
    (*this)(-k) = std::conj(avg);
  }
  (*this)(0) = (*this)(0).real();
  (*this)(grid_.min_frequency()) = (*this)(grid_.min_frequency()).real();
  realness_ = Realness::real;
  return *this;
}

namespace {

void require_same_grid(const SpectralField& a, const SpectralField& b) {
  if (!(a.grid() == b.grid()))
    throw Error(ErrorKind::input_shape, "fields live on different grids");
}

}  // namespace

SpectralField& SpectralField::operator+=(const SpectralField& o) {
  require_same_grid(*this, o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  if (!o.is_real()) realness_ = Realness::complex;
  return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& o) {
  require_same_grid(*this, o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  if (!o.is_real()) realness_ = Realness::complex;
  return *this;
}

SpectralField& SpectralField::operator*=(cplx a) {
  for (cplx& c : coeffs_) c *= a;
  if (a.imag() != 0.0) realness_ = Realness::complex;
  return *this;
}

SpectralField& SpectralField::operator*=(double a) {
  for (cplx& c : coeffs_) c *= a;
  return *this;
}

SpectralField fft_forward(const TorusGrid& grid, std::span<const cplx> samples) {
  if (samples.size() != static_cast<std::size_t>(grid.size()))
    throw Error(ErrorKind::input_shape,
                "expected " + std::to_string(grid.size()) + " samples, got " +
                    std::to_string(samples.size()));
  SpectralField f(grid);
  detail::fft(samples, f.data(), true);
  const double inv = 1.0 / grid.size();
  for (cplx& c : f.data()) c *= inv;
  return f;
}

SpectralField fft_forward_real(const TorusGrid& grid, std::span<const double> samples) {
  std::vector<cplx> z(samples.begin(), samples.end());
  SpectralField f = fft_forward(grid, z);
  return f.enforce_real();
}

std::vector<cplx> fft_inverse(const SpectralField& field) {
  std::vector<cplx> out(field.grid().size());
  detail::fft(field.data(), out, false);
  return out;
}

std::vector<double> fft_inverse_real(const SpectralField& field) {
  const std::vector<cplx> z = fft_inverse(field);
  std::vector<double> out(z.size());
  for (std::size_t j = 0; j < z.size(); ++j) out[j] = z[j].real();
  return out;
}

double sobolev_norm(const SpectralField& field, double s, Homogeneity h) {
  const TorusGrid& g = field.grid();
  const bool homog = h == Homogeneity::homogeneous;
  if (homog && s < 0.0 && std::abs(field(0)) != 0.0)
    throw Error(ErrorKind::mean_zero_violation,
                "homogeneous Sobolev norm of negative order needs a mean-zero field");
  // Sum by increasing |k| so the result does not depend on storage order.
  double sum = 0.0;
  auto term = [&](int k) {
    if (homog && k == 0) return 0.0;
    const double w = homog ? std::pow(std::abs(double(k)), 2.0 * s)
                           : std::pow(1.0 + double(k) * k, s);
    return w * std::norm(field(k));
  };
  sum += term(0);
  for (int m = 1; m <= g.size() / 2; ++m) {
    if (m <= g.max_frequency()) sum += term(m);
    sum += term(-m);
  }
  return std::sqrt(sum);
}

double l2_norm(const SpectralField& field) {
  return sobolev_norm(field, 0.0, Homogeneity::inhomogeneous);
}

SpectralField dealias(SpectralField field) {
  const int cut = field.grid().dealias_cutoff();
  field.apply([cut](int k) { return std::abs(k) > cut ? 0.0 : 1.0; });
  return field;
}

SpectralField derivative(SpectralField field, int order) {
  const bool keeps_real = order % 2 == 0;
  const Realness r = field.realness();
  field.apply([order](int k) { return std::pow(cplx(0.0, double(k)), order); });
  // The Nyquist mode has no partner; for odd orders drop it so that real
  // fields stay real.
  if (!keeps_real) field(field.grid().min_frequency()) = 0.0;
  field.set_realness(r);
  return field;
}

SpectralField resample(const SpectralField& field, const TorusGrid& target) {
  SpectralField out(target, field.realness());
  const int kmax = std::min(field.grid().max_frequency(), target.max_frequency());
  const int kmin = std::max(field.grid().min_frequency(), target.min_frequency());
  for (int k = kmin; k <= kmax; ++k) out(k) = field(k);
  return out;
}

SpectralField exact_product(const SpectralField& a, const SpectralField& b) {
  require_same_grid(a, b);
  const TorusGrid& g = a.grid();
  const TorusGrid big(2 * g.size());
  const std::vector<cplx> pa = fft_inverse(resample(a, big));
  const std::vector<cplx> pb = fft_inverse(resample(b, big));
  std::vector<cplx> prod(pa.size());
  for (std::size_t j = 0; j < prod.size(); ++j) prod[j] = pa[j] * pb[j];
  SpectralField p = resample(fft_forward(big, prod), g);
  if (a.is_real() && b.is_real()) p.set_realness(Realness::real);
  return p;
}

SpectralField conjugate(const SpectralField& field) {
  const TorusGrid& g = field.grid();
  SpectralField out(g, field.realness());
  for (int k = g.min_frequency(); k <= g.max_frequency(); ++k) {
    const int mk = k == g.min_frequency() ? k : -k;
    out(k) = std::conj(field(mk));
  }
  return out;
}

SpectralField modulus_squared(const SpectralField& field, bool dealiased) {
  std::vector<cplx> z = fft_inverse(field);
  for (cplx& v : z) v = std::norm(v);
  SpectralField out = fft_forward(field.grid(), z);
  out.enforce_real();
  return dealiased ? dealias(std::move(out)) : out;
}

double grid_mean(std::span<const double> samples) {
  double sum = 0.0;
  for (double v : samples) sum += v;
  return sum / static_cast<double>(samples.size());
}

}  // namespace qzs
