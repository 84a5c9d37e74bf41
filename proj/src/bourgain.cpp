#include "qzs/bourgain.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fft_backend.hpp"
#include "qzs/bump.hpp"
#include "qzs/error.hpp"

namespace qzs {

SpacetimeField::SpacetimeField(TorusGrid grid, double dtau) : grid_(grid), dtau_(dtau) {
  if (!(dtau > 0.0) || !std::isfinite(dtau))
    throw Error(ErrorKind::domain, "tau spacing must be positive");
}

void SpacetimeField::add(int k, long j0, std::span<const cplx> values) {
  if (!grid_.contains(k))
    throw Error(ErrorKind::input_shape, "frequency " + std::to_string(k) + " is off the grid");
  if (values.empty()) return;
  std::vector<TauSegment>& segs = segments_[k];
  long lo = j0;
  long hi = j0 + static_cast<long>(values.size());
  // Collect every segment that overlaps or touches [lo, hi).
  std::vector<TauSegment> keep, merge;
  for (TauSegment& s : segs) {
    if (s.j_end() < lo || s.j0 > hi) {
      keep.push_back(std::move(s));
    } else {
      lo = std::min(lo, s.j0);
      hi = std::max(hi, s.j_end());
      merge.push_back(std::move(s));
    }
  }
  TauSegment joined{lo, std::vector<cplx>(static_cast<std::size_t>(hi - lo))};
  for (const TauSegment& s : merge)
    for (std::size_t i = 0; i < s.values.size(); ++i)
      joined.values[static_cast<std::size_t>(s.j0 - lo) + i] += s.values[i];
  for (std::size_t i = 0; i < values.size(); ++i)
    joined.values[static_cast<std::size_t>(j0 - lo) + i] += values[i];
  keep.push_back(std::move(joined));
  std::sort(keep.begin(), keep.end(),
            [](const TauSegment& a, const TauSegment& b) { return a.j0 < b.j0; });
  segs = std::move(keep);
}

cplx SpacetimeField::value(int k, long j) const {
  auto it = segments_.find(k);
  if (it == segments_.end()) return {};
  for (const TauSegment& s : it->second)
    if (j >= s.j0 && j < s.j_end()) return s.values[static_cast<std::size_t>(j - s.j0)];
  return {};
}

double SpacetimeField::tau_extent() const {
  double m = 0.0;
  for (const auto& [k, segs] : segments_)
    for (const TauSegment& s : segs)
      m = std::max({m, std::abs(tau(s.j0)), std::abs(tau(s.j_end() - 1))});
  return m;
}

double WeightKind::operator()(int k, double tau) const {
  if (kind == DispersionKind::schrodinger) return bracket(tau + schrodinger_symbol(params, k));
  return bracket(std::abs(tau) - wave_frequency(params, k));
}

namespace {

// Frequencies ordered by |k|, then k, so that sums have a fixed order.
std::vector<int> ordered_keys(const SpacetimeField& f) {
  std::vector<int> keys;
  for (const auto& [k, s] : f.segments()) keys.push_back(k);
  std::sort(keys.begin(), keys.end(), [](int a, int b) {
    return std::abs(a) != std::abs(b) ? std::abs(a) < std::abs(b) : a < b;
  });
  return keys;
}

bool in_outer_half(const TauSegment& s, long j) {
  const double half = 0.5 * static_cast<double>(s.values.size() - 1);
  const double centre = static_cast<double>(s.j0) + half;
  return std::abs(static_cast<double>(j) - centre) > 0.5 * half;
}

struct XsbParts {
  double sum = 0.0;
  double tail = 0.0;
};

XsbParts xsb_sum(const SpacetimeField& f, double r, double b, const WeightKind& w) {
  XsbParts p;
  for (int k : ordered_keys(f)) {
    const double kw = std::pow(bracket(k), 2.0 * r);
    double ks = 0.0, kt = 0.0;
    for (const TauSegment& s : f.segments().at(k)) {
      for (long j = s.j0; j < s.j_end(); ++j) {
        const double v = std::pow(w(k, f.tau(j)), 2.0 * b) *
                         std::norm(s.values[static_cast<std::size_t>(j - s.j0)]);
        ks += v;
        if (in_outer_half(s, j)) kt += v;
      }
    }
    p.sum += f.dtau() * kw * ks;
    p.tail += f.dtau() * kw * kt;
  }
  return p;
}

NormResult finish(double value, double tail, double total) {
  NormResult n;
  n.value = value;
  n.tail_fraction = total > 0.0 ? tail / total : 0.0;
  n.truncated = n.tail_fraction > kTailWarningThreshold;
  return n;
}

// l^2_k of <k>^r sum_j dtau w^{-e} |c|
XsbParts l1_part(const SpacetimeField& f, double r, double e, const WeightKind& w) {
  XsbParts p;
  for (int k : ordered_keys(f)) {
    double ks = 0.0, kt = 0.0;
    for (const TauSegment& s : f.segments().at(k)) {
      for (long j = s.j0; j < s.j_end(); ++j) {
        const double v = std::abs(s.values[static_cast<std::size_t>(j - s.j0)]) /
                         std::pow(w(k, f.tau(j)), e);
        ks += v;
        if (in_outer_half(s, j)) kt += v;
      }
    }
    const double kw = std::pow(bracket(k), 2.0 * r) * f.dtau() * f.dtau();
    p.sum += kw * ks * ks;
    p.tail += kw * kt * kt;
  }
  return p;
}

NormResult combined(const SpacetimeField& f, double r, double b, double e, const WeightKind& w) {
  const XsbParts x = xsb_sum(f, r, b, w);
  const XsbParts l = l1_part(f, r, e, w);
  const double xv = std::sqrt(x.sum);
  const double lv = std::sqrt(l.sum);
  const double xt = x.sum > 0.0 ? x.tail / x.sum : 0.0;
  const double lt = l.sum > 0.0 ? std::sqrt(l.tail / l.sum) : 0.0;
  NormResult n;
  n.value = xv + lv;
  n.tail_fraction = std::max(xt, lt);
  n.truncated = n.tail_fraction > kTailWarningThreshold;
  return n;
}

}  // namespace

NormResult xsb_norm(const SpacetimeField& f, double r, double b, const WeightKind& w) {
  const XsbParts p = xsb_sum(f, r, b, w);
  return finish(std::sqrt(p.sum), p.tail, p.sum);
}

NormResult y_norm(const SpacetimeField& f, double r, const WeightKind& w) {
  return combined(f, r, 0.5, 0.0, w);
}

NormResult z_norm(const SpacetimeField& f, double r, const WeightKind& w) {
  return combined(f, r, -0.5, 1.0, w);
}

SpacetimeField spacetime_transform(std::span<const SpectralField> samples,
                                   std::span<const double> times,
                                   const TransformOptions& options) {
  const std::size_t P = samples.size();
  if (P != times.size()) throw Error(ErrorKind::input_shape, "one time per sample required");
  if (P < 3 || P % 2 == 0)
    throw Error(ErrorKind::input_shape, "an odd number (>= 3) of time samples is required");
  const double dt = (times[P - 1] - times[0]) / static_cast<double>(P - 1);
  if (!(dt > 0.0)) throw Error(ErrorKind::input, "times must increase");
  for (std::size_t i = 0; i < P; ++i)
    if (std::abs(times[i] - (times[0] + static_cast<double>(i) * dt)) > 1e-9 * dt * P)
      throw Error(ErrorKind::input, "time grid is not uniform");
  const TorusGrid& g = samples[0].grid();
  for (const SpectralField& s : samples)
    if (!(s.grid() == g)) throw Error(ErrorKind::input_shape, "samples on different grids");

  const double dtau = 2.0 * kPi / (static_cast<double>(P) * dt);
  const long half = static_cast<long>(P / 2);
  SpacetimeField out(g, dtau);
  std::vector<cplx> series(P), spec(P);
  std::vector<double> psi(P, 1.0);
  if (options.cutoff)
    for (std::size_t i = 0; i < P; ++i) psi[i] = cutoff_psi(times[i] / options.cutoff_scale);

  for (int k = g.min_frequency(); k <= g.max_frequency(); ++k) {
    bool any = false;
    for (std::size_t i = 0; i < P; ++i) {
      series[i] = psi[i] * samples[i](k);
      any = any || series[i] != cplx{};
    }
    if (!any) continue;
    detail::fft(series, spec, true);
    std::vector<cplx> vals(P);
    for (long j = -half; j <= half; ++j) {
      const std::size_t idx = static_cast<std::size_t>(j < 0 ? j + static_cast<long>(P) : j);
      vals[static_cast<std::size_t>(j + half)] =
          dt / (2.0 * kPi) * std::polar(1.0, -dtau * static_cast<double>(j) * times[0]) * spec[idx];
    }
    out.add(k, -half, vals);
  }
  return out;
}

SpacetimeField spacetime_transform(const Trajectory& trajectory,
                                   const SpectralField QZSState::*field,
                                   const TransformOptions& options) {
  std::vector<SpectralField> samples;
  std::vector<double> times;
  for (const QZSState& s : trajectory) {
    samples.push_back(s.*field);
    times.push_back(s.time);
  }
  return spacetime_transform(samples, times, options);
}

SpacetimeField product(const SpacetimeField& a, const SpacetimeField& b) {
  if (a.grid() != b.grid() || std::abs(a.dtau() - b.dtau()) > 1e-12 * a.dtau())
    throw Error(ErrorKind::input, "fields live on incompatible lattices");
  const TorusGrid big(2 * a.grid().size());
  SpacetimeField out(big, a.dtau());
  std::vector<cplx> conv;
  for (const auto& [k1, segs1] : a.segments()) {
    for (const auto& [k2, segs2] : b.segments()) {
      for (const TauSegment& s1 : segs1) {
        for (const TauSegment& s2 : segs2) {
          const std::size_t n1 = s1.values.size(), n2 = s2.values.size();
          conv.assign(n1 + n2 - 1, cplx{});
          for (std::size_t i = 0; i < n1; ++i) {
            const cplx x = s1.values[i] * a.dtau();
            for (std::size_t j = 0; j < n2; ++j) conv[i + j] += x * s2.values[j];
          }
          out.add(k1 + k2, s1.j0 + s2.j0, conv);
        }
      }
    }
  }
  return out;
}

SpacetimeField conjugate(const SpacetimeField& f) {
  SpacetimeField out(f.grid(), f.dtau());
  for (const auto& [k, segs] : f.segments()) {
    if (!f.grid().contains(-k))
      throw Error(ErrorKind::input_shape, "conjugate of the Nyquist frequency is off the grid");
    for (const TauSegment& s : segs) {
      std::vector<cplx> v(s.values.rbegin(), s.values.rend());
      for (cplx& c : v) c = std::conj(c);
      out.add(-k, -(s.j_end() - 1), v);
    }
  }
  return out;
}

SpacetimeField apply_d_rho(const SpacetimeField& f, double rho) {
  SpacetimeField out(f.grid(), f.dtau());
  for (const auto& [k, segs] : f.segments()) {
    if (k == 0) continue;
    const double m = std::pow(std::abs(double(k)), rho);
    for (const TauSegment& s : segs) {
      std::vector<cplx> v = s.values;
      for (cplx& c : v) c *= m;
      out.add(k, s.j0, v);
    }
  }
  return out;
}

double sup_time_sobolev(const SpacetimeField& f, double r, std::span<const double> times) {
  double best = 0.0;
  for (double t : times) {
    double sum = 0.0;
    for (int k : ordered_keys(f)) {
      cplx acc{};
      for (const TauSegment& s : f.segments().at(k))
        for (long j = s.j0; j < s.j_end(); ++j)
          acc += s.values[static_cast<std::size_t>(j - s.j0)] * std::polar(1.0, f.tau(j) * t);
      sum += std::pow(bracket(k), 2.0 * r) * std::norm(acc * f.dtau());
    }
    best = std::max(best, std::sqrt(sum));
  }
  return best;
}

}  // namespace qzs
