#pragma once

// Independent reference computations used by the tests. They work from the
// definitions by direct summation and share no code with the library.

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;
inline constexpr double pi = 3.14159265358979323846;

/// Dense coefficient table indexed by k in [-M/2, M/2 - 1].
struct Coeffs {
  int M = 0;
  std::vector<cplx> c;  // c[k + M/2]
  explicit Coeffs(int m) : M(m), c(std::size_t(m)) {}
  cplx& at(int k) { return c[std::size_t(k + M / 2)]; }
  cplx at(int k) const { return c[std::size_t(k + M / 2)]; }
  int kmin() const { return -M / 2; }
  int kmax() const { return M / 2 - 1; }
};

/// samples(x_j) = sum_k c(k) e^{ikx_j}, x_j = 2 pi j / M
inline std::vector<cplx> synthesize(const Coeffs& f) {
  std::vector<cplx> out(std::size_t(f.M));
  for (int j = 0; j < f.M; ++j) {
    const double x = 2.0 * pi * j / f.M;
    cplx s = 0.0;
    for (int k = f.kmin(); k <= f.kmax(); ++k) s += f.at(k) * std::polar(1.0, k * x);
    out[std::size_t(j)] = s;
  }
  return out;
}

/// c(k) = (1/M) sum_j f(x_j) e^{-ikx_j}
inline Coeffs analyze(const std::vector<cplx>& samples) {
  Coeffs f(int(samples.size()));
  for (int k = f.kmin(); k <= f.kmax(); ++k) {
    cplx s = 0.0;
    for (int j = 0; j < f.M; ++j) s += samples[std::size_t(j)] * std::polar(1.0, -k * 2.0 * pi * j / f.M);
    f.at(k) = s / double(f.M);
  }
  return f;
}

inline double bracket(double x) { return std::sqrt(1.0 + x * x); }

inline double sobolev(const Coeffs& f, double s) {
  double acc = 0.0;
  for (int k = f.kmin(); k <= f.kmax(); ++k) acc += std::pow(1.0 + double(k) * k, s) * std::norm(f.at(k));
  return std::sqrt(acc);
}

/// Full linear convolution of two coefficient tables, (a*b)(k) = sum a(k1) b(k-k1).
inline std::map<int, cplx> convolve(const Coeffs& a, const Coeffs& b) {
  std::map<int, cplx> out;
  for (int k1 = a.kmin(); k1 <= a.kmax(); ++k1)
    for (int k2 = b.kmin(); k2 <= b.kmax(); ++k2) out[k1 + k2] += a.at(k1) * b.at(k2);
  return out;
}

/// Random coefficients on |k| <= degree with a fixed std engine.
inline Coeffs random_coeffs(int M, int degree, std::uint64_t seed, bool real = false) {
  std::mt19937_64 eng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Coeffs f(M);
  for (int k = -degree; k <= degree; ++k) f.at(k) = cplx(u(eng), u(eng));
  if (real) {
    for (int k = 1; k <= degree; ++k) f.at(-k) = std::conj(f.at(k));
    f.at(0) = f.at(0).real();
  }
  return f;
}

}  // namespace oracle
