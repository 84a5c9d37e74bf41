#include "qzs/initial_data.hpp"

#include <cmath>

#include "qzs/error.hpp"
#include "qzs/rng.hpp"

namespace qzs {

InitialData plane_wave_data(const TorusGrid& grid, int N, double amplitude) {
  if (!grid.contains(N)) throw Error(ErrorKind::domain, "plane wave frequency outside grid");
  InitialData d{SpectralField(grid), SpectralField(grid, Realness::real),
                SpectralField(grid, Realness::real)};
  d.u0(N) = amplitude;
  return d;
}

InitialData random_smooth_data(const TorusGrid& grid, std::uint64_t seed, int max_mode,
                               double size, double s, double l) {
  if (max_mode < 1 || max_mode > grid.dealias_cutoff())
    throw Error(ErrorKind::domain, "max_mode must lie in [1, M/3]");
  if (!(size > 0.0)) throw Error(ErrorKind::domain, "size must be positive");
  Rng rng(seed);
  InitialData d{SpectralField(grid), SpectralField(grid, Realness::real),
                SpectralField(grid, Realness::real)};
  for (int k = -max_mode; k <= max_mode; ++k) {
    if (k == 0) continue;
    d.u0(k) = rng.complex_normal() / std::pow(bracket(k), 4.0);
  }
  for (SpectralField* f : {&d.n0, &d.n1}) {
    for (int k = 1; k <= max_mode; ++k) {
      const cplx c = rng.complex_normal() / std::pow(bracket(k), 4.0);
      (*f)(k) = c;
      (*f)(-k) = std::conj(c);
    }
  }
  const double total =
      sobolev_norm(d.u0, s) + sobolev_norm(d.n0, l) + sobolev_norm(d.n1, l - 1.0);
  const double scale = size / total;
  d.u0 *= scale;
  d.n0 *= scale;
  d.n1 *= scale;
  return d;
}

InitialData smooth_reference_data(const TorusGrid& grid) {
  if (grid.size() < 8) throw Error(ErrorKind::domain, "grid too small");
  InitialData d{SpectralField(grid), SpectralField(grid, Realness::real),
                SpectralField(grid, Realness::real)};
  d.u0(1) = 0.5;
  d.u0(-2) = 0.25;
  d.n0(2) = 0.15;
  d.n0(-2) = 0.15;
  d.n1(1) = cplx(0.0, -0.1);
  d.n1(-1) = cplx(0.0, 0.1);
  return d;
}

}  // namespace qzs
