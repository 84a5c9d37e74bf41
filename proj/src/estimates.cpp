#include "qzs/estimates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qzs/error.hpp"
#include "qzs/parallel.hpp"
#include "qzs/rng.hpp"

namespace qzs {

RegionMembership region_membership(double s, double l) {
  RegionMembership r;
  r.in_omega_l = s >= 0.0 && l >= -1.0 && l < 2.0 * s + 1.0 && s - l > -2.0 && s - l <= 2.0;
  r.in_omega_g = (s - l >= 0.0 && s - l <= 2.0 && s + l >= 4.0) || (s == 2.0 && l == 1.0);
  return r;
}

double h_weight(long k, long k1, int sign, const PropagatorParams& p) {
  const double a = double(k), b = double(k1);
  return (a + b) * (p.alpha + p.eps * p.eps * (a * a + b * b)) -
         sign * p.beta * bracket(p.eps * (a - b));
}

int resonance_sign(long k2, double tau2) {
  const int sk = k2 >= 0 ? 1 : -1;
  return tau2 >= 0.0 ? -sk : sk;
}

ResonanceCheck resonance_identity(long k, long k1, double tau, double tau1, int sign,
                                  const PropagatorParams& p) {
  const long k2 = k - k1;
  const double tau2 = tau - tau1;
  const double a = tau + schrodinger_symbol(p, double(k));
  const double a1 = tau1 + schrodinger_symbol(p, double(k1));
  const double a2 = tau2 + sign * p.beta * double(k2) * bracket(p.eps * double(k2));
  ResonanceCheck r;
  r.lhs = a - a1 - a2;
  r.rhs = double(k2) * h_weight(k, k1, sign, p);
  r.max_of_three =
      std::max({std::abs(a), std::abs(a1), std::abs(std::abs(tau2) - wave_frequency(p, double(k2)))});
  r.lower_bound =
      std::abs(double(k2)) * std::abs(h_weight(k, k1, resonance_sign(k2, tau2), p)) / 3.0;
  return r;
}

SigmaResult sigma1(long k, double tau, double e1, long K_max, const PropagatorParams& p) {
  if (!(e1 > 0.25)) throw Error(ErrorKind::hypothesis_violation, "e1 must exceed 1/4");
  if (p.eps == 0.0 && !(e1 > 0.5))
    throw Error(ErrorKind::hypothesis_violation, "e1 must exceed 1/2 when eps = 0");
  if (K_max < 1) throw Error(ErrorKind::domain, "K_max must be positive");
  SigmaResult r;
  for (long k1 = -K_max; k1 <= K_max; ++k1) {
    if (k1 == k) continue;
    const double base = schrodinger_symbol(p, double(k1)) + tau;
    const double d = double(k - k1);
    const double wave = p.beta * d * bracket(p.eps * d);
    r.truncated += std::pow(bracket(base + wave), -e1) + std::pow(bracket(base - wave), -e1);
  }
  // For |k1| = x > K_max every argument is at least x^q (lead - loss) where
  // the loss terms shrink relative to x^q as x grows.
  const double K = double(K_max);
  const double q = p.eps > 0.0 ? 4.0 : 2.0;
  const double lead = p.eps > 0.0 ? p.eps * p.eps : p.alpha;
  const double reach = K + std::abs(double(k));
  const double loss = (std::abs(tau) + p.beta * reach * bracket(p.eps * reach)) / std::pow(K, q);
  const double gamma = lead - loss;
  if (!(gamma > 0.0))
    throw Error(ErrorKind::domain, "K_max too small to bound the tail of sigma1 at this tau");
  r.tail_bound = 4.0 * std::pow(gamma, -e1) * std::pow(K, 1.0 - q * e1) / (q * e1 - 1.0);
  r.value = r.truncated + r.tail_bound;
  return r;
}

double sigma2_cubic(long k, double tau, double x, const PropagatorParams& p) {
  const double kk = double(k);
  const double e2 = p.eps * p.eps;
  const double c2 = -1.5 * kk;
  const double c1 = (p.alpha + 2.0 * e2 * kk * kk) / (2.0 * e2);
  const double c0 = (tau - schrodinger_symbol(p, kk)) / (4.0 * e2 * kk);
  return ((x + c2) * x + c1) * x + c0;
}

SigmaResult sigma2(long k, double tau, double e2, long K_max, const PropagatorParams& p) {
  if (!(e2 > 1.0 / 3.0)) throw Error(ErrorKind::hypothesis_violation, "e2 must exceed 1/3");
  if (k == 0) throw Error(ErrorKind::domain, "sigma2 is undefined at k = 0");
  if (!(p.eps > 0.0)) throw Error(ErrorKind::singular_parameter, "sigma2 requires eps > 0");
  if (K_max < 1) throw Error(ErrorKind::domain, "K_max must be positive");
  SigmaResult r;
  r.truncated = std::pow(bracket(sigma2_cubic(k, tau, 0.0, p)), -e2);
  for (long m = 1; m <= K_max; ++m)
    r.truncated += std::pow(bracket(sigma2_cubic(k, tau, double(m), p)), -e2) +
                   std::pow(bracket(sigma2_cubic(k, tau, -double(m), p)), -e2);
  const double K = double(K_max);
  const double kk = double(k);
  const double e = p.eps * p.eps;
  const double c1 = (p.alpha + 2.0 * e * kk * kk) / (2.0 * e);
  const double c0 = (tau - schrodinger_symbol(p, kk)) / (4.0 * e * kk);
  const double gamma = 1.0 - 1.5 * std::abs(kk) / K - std::abs(c1) / (K * K) - std::abs(c0) / (K * K * K);
  if (!(gamma > 0.0))
    throw Error(ErrorKind::domain, "K_max too small to bound the tail of sigma2 at this tau");
  r.tail_bound = 2.0 * std::pow(gamma, -e2) * std::pow(K, 1.0 - 3.0 * e2) / (3.0 * e2 - 1.0);
  r.value = r.truncated + r.tail_bound;
  return r;
}

int sigma2_near_zero_count(long k, double tau, long K_max, const PropagatorParams& p) {
  int n = 0;
  for (long x = -K_max; x <= K_max; ++x)
    if (std::abs(sigma2_cubic(k, tau, double(x), p)) < 1.0) ++n;
  return n;
}

long brute_force_C1(const PropagatorParams& p, long K_scan) {
  for (long k = K_scan; k >= 0; --k) {
    const double kk = double(k);
    if (!(p.beta * bracket(p.eps * kk) < kk * (p.alpha + p.eps * p.eps * kk * kk))) return k + 1;
  }
  return 0;
}

HScanResult h_lower_bound_scan(const PropagatorParams& p, long K_scan) {
  if (!(p.eps > 0.0)) throw Error(ErrorKind::singular_parameter, "the scan requires eps > 0");
  HScanResult r;
  r.C1 = brute_force_C1(p, K_scan);
  r.C_threshold = std::max({double(r.C1), std::sqrt(3.0 * std::sqrt(2.0) * p.beta / p.eps),
                            1.0 / (3.0 * p.eps)});
  if (double(K_scan) < 4.0 * r.C_threshold)
    throw Error(ErrorKind::domain, "K_scan must be at least 4 C");
  r.c4_region_start =
      std::max(r.C_threshold, 10.0 * std::max(1.0 / p.eps, std::sqrt(p.beta / p.eps)));
  const double inf = std::numeric_limits<double>::infinity();
  r.c_measured = inf;
  r.c4_measured = inf;
  for (long k = -K_scan; k <= K_scan; ++k) {
    const bool big_k = std::abs(double(k)) >= r.C_threshold;
    const bool c4_k = k != 0 && std::abs(double(k)) >= r.c4_region_start;
    for (long k1 = -K_scan; k1 <= K_scan; ++k1) {
      if (k1 == k) continue;
      const bool in_c = big_k || std::abs(double(k1)) >= r.C_threshold;
      const bool in_c4 = c4_k && std::abs(k) >= 2 * std::abs(k1);
      if (!in_c && !in_c4) continue;
      const double h = std::min(std::abs(h_weight(k, k1, 1, p)), std::abs(h_weight(k, k1, -1, p)));
      const double d = std::abs(double(k - k1));
      if (in_c) r.c_measured = std::min(r.c_measured, h / d);
      if (in_c4) {
        const double k4 = std::pow(double(k), 4);
        r.c4_measured = std::min(r.c4_measured, d * h / k4);
      }
    }
  }
  return r;
}

const char* to_string(CaseQuantity q) {
  switch (q) {
    case CaseQuantity::I: return "I";
    case CaseQuantity::II: return "II";
    case CaseQuantity::III: return "III";
    case CaseQuantity::IV: return "IV";
    case CaseQuantity::V: return "V";
  }
  return "?";
}

void check_bilinear_hypotheses(const ExponentPoint& pt) {
  auto fail = [](const char* clause) {
    throw Error(ErrorKind::hypothesis_violation, std::string("hypothesis violated: ") + clause);
  };
  if (!(pt.rho > 0.0 && pt.rho <= 1.0)) fail("0 < rho <= 1");
  if (!(pt.s >= 0.0)) fail("s >= 0");
  if (!(pt.l >= -1.0)) fail("-1 <= l");
  if (!(pt.l <= 2.0 * pt.s + 1.0 - pt.rho)) fail("l <= 2s+1-rho");
  if (!(pt.s - pt.l >= -2.0 + pt.rho)) fail("-2+rho <= s-l");
  if (!(pt.s - pt.l <= 2.0)) fail("s-l <= 2");
  if (!(pt.b > 1.0 / 6.0 && pt.b <= 0.5)) fail("1/6 < b <= 1/2");
}

double tau_kernel(double delta, double gamma, double a) {
  const double ba = bracket(a);
  double phi = 1.0;
  if (delta == 1.0) phi = std::log(1.0 + ba);
  else if (delta < 1.0) phi = std::pow(ba, 1.0 - delta);
  return std::pow(ba, -gamma) * phi;
}

namespace {

struct Tables {
  long offset;
  std::vector<double> S, W;
  double s(long k) const { return S[static_cast<std::size_t>(k + offset)]; }
  double w(long k) const { return W[static_cast<std::size_t>(k + offset)]; }
};

Tables make_tables(const PropagatorParams& p, long reach) {
  Tables t{reach, {}, {}};
  for (long k = -reach; k <= reach; ++k) {
    t.S.push_back(schrodinger_symbol(p, double(k)));
    t.W.push_back(wave_frequency(p, double(k)));
  }
  return t;
}

// |h| minimized over both branches, and the wave-side analogue
// (2k1-k)(alpha + eps^2(k1^2 + (k-k1)^2)) -+ beta <eps k>.
double h_min(long k, long k1, const PropagatorParams& p) {
  return std::min(std::abs(h_weight(k, k1, 1, p)), std::abs(h_weight(k, k1, -1, p)));
}

double hw_min(long k, long k1, const PropagatorParams& p) {
  const double a = double(k), b = double(k1);
  const double core = (2.0 * b - a) * (p.alpha + p.eps * p.eps * (b * b + (a - b) * (a - b)));
  const double w = p.beta * bracket(p.eps * a);
  return std::min(std::abs(core - w), std::abs(core + w));
}

struct Sample {
  long k;
  double tau;
};

double evaluate(CaseQuantity which, const ExponentPoint& pt, const PropagatorParams& p,
                const Tables& t, long K, Sample smp) {
  const double s = pt.s, l = pt.l, b = pt.b, rho = pt.rho;
  const long k0 = smp.k;
  const double tau = smp.tau;
  auto br = [](long x) { return bracket(double(x)); };
  double sum = 0.0;
  switch (which) {
    case CaseQuantity::I: {
      const double w0 = std::abs(tau + t.s(k0));
      for (long k1 = -K; k1 <= K; ++k1) {
        if (k1 == k0) continue;
        if (w0 < std::abs(double(k0 - k1)) * h_min(k0, k1, p) / 3.0) continue;
        const double pre = std::pow(br(k1), -2.0 * s) * std::pow(br(k0 - k1), -2.0 * l);
        for (int sg : {1, -1})
          sum += pre * tau_kernel(2 * b, 2 * b, t.s(k1) + tau - sg * t.w(k0 - k1));
      }
      return std::pow(br(k0), 2.0 * s) / bracket(tau + t.s(k0)) * sum;
    }
    case CaseQuantity::II: {
      const double w0 = std::abs(tau + t.s(k0));
      for (long k = -K; k <= K; ++k) {
        if (k == k0) continue;
        if (w0 < std::abs(double(k - k0)) * h_min(k, k0, p) / 3.0) continue;
        const double pre = std::pow(br(k), 2.0 * s) * std::pow(br(k - k0), -2.0 * l);
        for (int sg : {1, -1})
          sum += pre * tau_kernel(1.0, 2 * b, t.s(k) + tau + sg * t.w(k - k0));
      }
      return std::pow(br(k0), -2.0 * s) / bracket(tau + t.s(k0)) * sum;
    }
    case CaseQuantity::III: {
      const double w0 = std::abs(std::abs(tau) - t.w(k0));
      for (long k = -K; k <= K; ++k) {
        if (w0 < std::abs(double(k0)) * h_min(k, k - k0, p) / 3.0) continue;
        const double pre = std::pow(br(k), 2.0 * s) * std::pow(br(k - k0), -2.0 * s);
        sum += pre * tau_kernel(1.0, 2 * b, t.s(k - k0) - t.s(k) - tau);
      }
      return sum / (std::pow(br(k0), 2.0 * l) * bracket(w0));
    }
    case CaseQuantity::IV: {
      const double w0 = std::abs(std::abs(tau) - t.w(k0));
      for (long k1 = -K; k1 <= K; ++k1) {
        if (w0 < std::abs(double(k0)) * hw_min(k0, k1, p) / 3.0) continue;
        const double pre = std::pow(br(k1), -2.0 * s) * std::pow(br(k0 - k1), -2.0 * s);
        sum += pre * tau_kernel(2 * b, 2 * b, t.s(k0 - k1) - t.s(k1) - tau);
      }
      return std::pow(br(k0), 2.0 * l + 2.0 * rho) / bracket(w0) * sum;
    }
    case CaseQuantity::V: {
      const double w0 = std::abs(tau + t.s(k0));
      for (long k = -K; k <= K; ++k) {
        if (k == 0) continue;
        if (w0 < std::abs(double(k)) * hw_min(k, k0, p) / 3.0) continue;
        const double pre = std::pow(br(k), 2.0 * l + 2.0 * rho) * std::pow(br(k - k0), -2.0 * s);
        for (int sg : {1, -1})
          sum += pre * tau_kernel(1.0, 2 * b, sg * t.w(k) - tau - t.s(k - k0));
      }
      return std::pow(br(k0), -2.0 * s) / bracket(tau + t.s(k0)) * sum;
    }
  }
  return 0.0;
}

}  // namespace

CaseQuantityResult case_quantity_sup(CaseQuantity which, const ExponentPoint& point,
                                     const PropagatorParams& p, long K_max,
                                     const TauSampling& sampling, int threads) {
  check_bilinear_hypotheses(point);
  p.validate();
  if (K_max < 1 || sampling.k_outer < 1) throw Error(ErrorKind::domain, "truncation must be positive");
  const Tables t = make_tables(p, K_max + sampling.k_outer);

  // Outer samples: tau anchored on the dispersion surface of the outer
  // variable. III and IV skip the zero frequency.
  std::vector<Sample> samples;
  const bool wave_outer = which == CaseQuantity::III || which == CaseQuantity::IV;
  for (long k = -sampling.k_outer; k <= sampling.k_outer; ++k) {
    if (wave_outer && k == 0) continue;
    for (double off : sampling.offsets) {
      if (wave_outer) {
        samples.push_back({k, t.w(k) + off});
        samples.push_back({k, -t.w(k) + off});
      } else {
        samples.push_back({k, -t.s(k) + off});
      }
    }
  }
  std::vector<double> values(samples.size());
  parallel_for(samples.size(), threads, [&](std::size_t i) {
    values[i] = evaluate(which, point, p, t, K_max, samples[i]);
  });
  CaseQuantityResult r;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (values[i] > r.sup) {
      r.sup = values[i];
      r.arg_k = samples[i].k;
      r.arg_tau = samples[i].tau;
    }
  }
  return r;
}

std::vector<SigmaSample> sigma_samples(std::uint64_t seed, int count, long k_range,
                                       const PropagatorParams& p) {
  if (count < 1 || k_range < 1) throw Error(ErrorKind::domain, "sample count and range must be positive");
  Rng rng(seed);
  std::vector<SigmaSample> out;
  out.reserve(std::size_t(count));
  while (out.size() < std::size_t(count)) {
    const long k = rng.integer(-k_range, k_range);
    const long j = rng.integer(-k_range, k_range);
    const double off = rng.uniform(-2.0, 2.0);
    if (k == 0) continue;
    out.push_back({k, -schrodinger_symbol(p, double(j)) + off});
  }
  return out;
}

std::vector<SigmaRow> sigma_scan(const std::vector<SigmaSample>& samples, double e1, double e2,
                                 long K_max, const PropagatorParams& p, int threads) {
  p.validate();
  std::vector<SigmaRow> rows(samples.size());
  parallel_for(samples.size(), threads, [&](std::size_t i) {
    rows[i].at = samples[i];
    rows[i].s1 = sigma1(samples[i].k, samples[i].tau, e1, K_max, p);
    rows[i].s2 = sigma2(samples[i].k, samples[i].tau, e2, K_max, p);
  });
  return rows;
}

ResonanceSurvey resonance_survey(std::uint64_t seed, int draws, long k_range, double tau_range,
                                 const PropagatorParams& p) {
  p.validate();
  Rng rng(seed);
  ResonanceSurvey r;
  r.draws = draws;
  for (int d = 0; d < draws; ++d) {
    const long k = rng.integer(-k_range, k_range);
    const long k1 = rng.integer(-k_range, k_range);
    const double tau = rng.uniform(-tau_range, tau_range);
    const double tau1 = rng.uniform(-tau_range, tau_range);
    for (int sign : {-1, 1}) {
      const ResonanceCheck c = resonance_identity(k, k1, tau, tau1, sign, p);
      r.max_defect = std::max(r.max_defect, std::abs(c.lhs - c.rhs) / (1.0 + std::abs(c.lhs)));
    }
    const ResonanceCheck c = resonance_identity(k, k1, tau, tau1, resonance_sign(k - k1, tau - tau1), p);
    if (c.max_of_three < c.lower_bound) ++r.bound_failures;
  }
  return r;
}

}  // namespace qzs
