#pragma once

#include <cmath>
#include <complex>

namespace qzs {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

/// Japanese bracket (1 + x^2)^{1/2}.
inline double bracket(double x) { return std::sqrt(1.0 + x * x); }

}  // namespace qzs
