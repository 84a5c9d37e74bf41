#include "qzs/bump.hpp"

#include <cmath>

#include "qzs/error.hpp"

namespace qzs {
namespace {

double edge(double x) { return x > 0.0 ? std::exp(-1.0 / x) : 0.0; }

// 0 for x <= 0, 1 for x >= 1, smooth in between.
double smooth_step(double x) {
  const double a = edge(x);
  const double b = edge(1.0 - x);
  return a / (a + b);
}

}  // namespace

double plateau_bump(double x) { return 1.0 - smooth_step(std::abs(x) - 1.0); }

SpectralField mollify(SpectralField field, double h) {
  if (!(h > 0.0)) throw Error(ErrorKind::domain, "mollifier scale h must be positive");
  return mollify(std::move(field), h, plateau_bump);
}

}  // namespace qzs
