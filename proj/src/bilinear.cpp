#include "qzs/bilinear.hpp"

#include <cmath>
#include <string>

#include "qzs/bump.hpp"
#include "qzs/error.hpp"
#include "qzs/fit.hpp"
#include "qzs/parallel.hpp"
#include "qzs/rng.hpp"

namespace qzs {
namespace {

EstimateReport make_report(std::string description, double lhs, double rhs) {
  EstimateReport r;
  r.description = std::move(description);
  r.lhs = lhs;
  r.rhs = rhs;
  r.ratio = rhs > 0.0 ? lhs / rhs : 0.0;
  return r;
}

WeightKind schrodinger(const PropagatorParams& p) { return {DispersionKind::schrodinger, p}; }
WeightKind wave(const PropagatorParams& p) { return {DispersionKind::wave, p}; }

// Sample f(tau - centre) on the lattice nodes within radius of centre.
void add_bump(SpacetimeField& field, int k, double centre, double radius, cplx amplitude,
              const std::function<double(double)>& phi) {
  const double h = field.dtau();
  const long lo = static_cast<long>(std::ceil((centre - radius) / h));
  const long hi = static_cast<long>(std::floor((centre + radius) / h));
  if (hi < lo) return;
  std::vector<cplx> v(static_cast<std::size_t>(hi - lo + 1));
  for (long j = lo; j <= hi; ++j)
    v[static_cast<std::size_t>(j - lo)] = amplitude * phi(field.tau(j) - centre);
  field.add(k, lo, v);
}

// phi(|tau| - c): two bumps at +-c, or one merged profile when they overlap.
void add_even_bump(SpacetimeField& field, int k, double c, double radius,
                   const std::function<double(double)>& phi) {
  if (c > radius) {
    add_bump(field, k, c, radius, 1.0, phi);
    add_bump(field, k, -c, radius, 1.0, phi);
    return;
  }
  const double h = field.dtau();
  const double reach = c + radius;
  const long lo = static_cast<long>(std::ceil(-reach / h));
  const long hi = static_cast<long>(std::floor(reach / h));
  std::vector<cplx> v(static_cast<std::size_t>(hi - lo + 1));
  for (long j = lo; j <= hi; ++j)
    v[static_cast<std::size_t>(j - lo)] = phi(std::abs(field.tau(j)) - c);
  field.add(k, lo, v);
}

}  // namespace

EstimateReport bilinear_ratio_schrodinger(const SpacetimeField& u, const SpacetimeField& n,
                                          const ExponentPoint& pt, const PropagatorParams& p) {
  const WeightKind S = schrodinger(p), W = wave(p);
  const double lhs = xsb_norm(product(u, n), pt.s, -0.5, S).value;
  const double rhs = xsb_norm(u, pt.s, pt.b, S).value * xsb_norm(n, pt.l, 0.5, W).value +
                     xsb_norm(u, pt.s, 0.5, S).value * xsb_norm(n, pt.l, pt.b, W).value;
  return make_report("schrodinger", lhs, rhs);
}

EstimateReport bilinear_ratio_wave(const SpacetimeField& u, const SpacetimeField& v,
                                   const ExponentPoint& pt, const PropagatorParams& p) {
  if (!(pt.rho > 0.0 && pt.rho <= 1.0)) throw Error(ErrorKind::domain, "rho must lie in (0, 1]");
  const WeightKind S = schrodinger(p), W = wave(p);
  const SpacetimeField prod = apply_d_rho(product(u, conjugate(v)), pt.rho);
  const double lhs = xsb_norm(prod, pt.l, -0.5, W).value;
  const double rhs = xsb_norm(u, pt.s, pt.b, S).value * xsb_norm(v, pt.s, 0.5, S).value +
                     xsb_norm(u, pt.s, 0.5, S).value * xsb_norm(v, pt.s, pt.b, S).value;
  return make_report("wave", lhs, rhs);
}

double counterexample_bump(double tau) { return plateau_bump(2.0 * tau); }

TorusGrid counterexample_grid(long N) {
  int M = 8;
  while (M / 2 - 1 < 2 * std::abs(N)) M *= 2;
  return TorusGrid(M);
}

SpacetimeField counterexample_family(int index, FamilyMember which, long N,
                                     const PropagatorParams& p, double dtau,
                                     const std::function<double(double)>& phi,
                                     double phi_radius) {
  const bool exists = index >= 1 && index <= 8 &&
                      (which == FamilyMember::u || (which == FamilyMember::n && index <= 4) ||
                       (which == FamilyMember::v && index >= 5));
  if (!exists)
    throw Error(ErrorKind::domain, "no counterexample field with index " + std::to_string(index) +
                                       " of this kind");
  const TorusGrid grid = counterexample_grid(N);
  SpacetimeField f(grid, dtau);
  const double n = double(N);
  const double S = schrodinger_symbol(p, n);        // alpha N^2 + eps^2 N^4
  const double W1 = wave_frequency(p, n);           // beta N <eps N>
  const double W2 = wave_frequency(p, 2.0 * n);     // 2 beta N <2 eps N>
  const int iN = static_cast<int>(N);
  // phi(tau + shift) is a bump centred at -shift.
  auto u_field = [&](int k, double shift) { add_bump(f, k, -shift, phi_radius, 1.0, phi); };

  if (which == FamilyMember::u) {
    switch (index) {
      case 1: u_field(-iN, S); break;
      case 2: u_field(-iN, S + W2); break;
      case 3: u_field(0, 0.0); break;
      case 4: u_field(0, S + W1); break;
      case 5: u_field(iN, S); break;
      case 6: u_field(iN, S - W2); break;
      case 7: u_field(0, 0.0); break;
      case 8: u_field(0, S + W1); break;
    }
  } else if (which == FamilyMember::n) {
    if (index <= 2) add_even_bump(f, 2 * iN, W2, phi_radius, phi);
    else add_even_bump(f, iN, W1, phi_radius, phi);
  } else {
    if (index <= 6) u_field(-iN, S);
    else u_field(iN, S);
  }
  return f;
}

EstimateReport necessity_scan(int pair_index, const ExponentPoint& pt, const PropagatorParams& p,
                              const std::vector<long>& N_list, const NecessityConfig& cfg) {
  if (pair_index < 1 || pair_index > 8) throw Error(ErrorKind::domain, "pair index must be 1..8");
  if (N_list.size() < 4)
    throw Error(ErrorKind::insufficient_data, "necessity scan needs at least 4 values of N");
  for (std::size_t i = 1; i < N_list.size(); ++i)
    if (!(N_list[i] > N_list[i - 1])) throw Error(ErrorKind::input, "N list must increase");
  if (N_list.front() < 1) throw Error(ErrorKind::domain, "N must be positive");
  const WeightKind S = schrodinger(p), W = wave(p);

  EstimateReport rep;
  rep.description = "pair " + std::to_string(pair_index);
  std::vector<double> lx, ly;
  for (long N : N_list) {
    double lhs = 0.0, rhs = 0.0;
    const SpacetimeField u = counterexample_family(pair_index, FamilyMember::u, N, p, cfg.dtau);
    if (pair_index <= 4) {
      const SpacetimeField n = counterexample_family(pair_index, FamilyMember::n, N, p, cfg.dtau);
      lhs = xsb_norm(product(u, n), pt.s, pt.b - 1.0, S).value;
      rhs = xsb_norm(u, pt.s, pt.b, S).value * xsb_norm(n, pt.l, pt.b, W).value;
    } else {
      const SpacetimeField v = counterexample_family(pair_index, FamilyMember::v, N, p, cfg.dtau);
      lhs = xsb_norm(apply_d_rho(product(u, conjugate(v)), pt.rho), pt.l, pt.b - 1.0, W).value;
      rhs = xsb_norm(u, pt.s, pt.b, S).value * xsb_norm(v, pt.s, pt.b, S).value;
    }
    const double ratio = lhs / rhs;
    rep.N_values.push_back(double(N));
    rep.ratios.push_back(ratio);
    lx.push_back(std::log(double(N)));
    ly.push_back(std::log(ratio));
  }
  const LineFit fit = fit_line(lx, ly);
  rep.fitted_exponent = fit.slope;
  rep.fit_residual = fit.rms_residual;
  rep.lhs = 0.0;
  rep.rhs = 0.0;
  rep.ratio = rep.ratios.back();
  return rep;
}

namespace {

// A few bumps near the Schrodinger surface tau = -S(k) (sign = 0) or near
// the wave surfaces tau = +-W(k).
SpacetimeField random_field(Rng& rng, const TorusGrid& grid, const PropagatorParams& p,
                            const CorpusConfig& cfg, bool wave_side) {
  SpacetimeField f(grid, cfg.dtau);
  const int modes = static_cast<int>(rng.integer(1, cfg.max_modes));
  for (int m = 0; m < modes; ++m) {
    const int k = static_cast<int>(rng.integer(-cfg.k_max, cfg.k_max));
    const double offset = rng.uniform(-cfg.max_offset, cfg.max_offset);
    const double radius = rng.uniform(0.5, 2.0);
    const cplx amp = rng.complex_normal();
    double centre = -schrodinger_symbol(p, double(k)) + offset;
    if (wave_side) {
      const double side = rng.uniform() < 0.5 ? -1.0 : 1.0;
      centre = side * wave_frequency(p, double(k)) + offset;
    }
    add_bump(f, k, centre, radius, amp, [radius](double t) { return plateau_bump(2.0 * t / radius); });
  }
  return f;
}

}  // namespace

CorpusResult bilinear_corpus(std::uint64_t seed, const ExponentPoint& pt,
                             const PropagatorParams& p, const CorpusConfig& cfg, int threads) {
  if (cfg.draws < 1) throw Error(ErrorKind::domain, "corpus needs at least one draw");
  const TorusGrid grid(cfg.grid_size);
  if (!grid.contains(cfg.k_max) || !grid.contains(-cfg.k_max))
    throw Error(ErrorKind::domain, "corpus frequencies exceed the grid");

  // Draw every field first so that the random stream does not depend on the
  // thread count.
  Rng rng(seed);
  struct Draw {
    SpacetimeField u, n, u2, v;
  };
  std::vector<Draw> draws;
  draws.reserve(static_cast<std::size_t>(cfg.draws));
  for (int i = 0; i < cfg.draws; ++i) {
    SpacetimeField u = random_field(rng, grid, p, cfg, false);
    SpacetimeField n = random_field(rng, grid, p, cfg, true);
    SpacetimeField u2 = random_field(rng, grid, p, cfg, false);
    SpacetimeField v = random_field(rng, grid, p, cfg, false);
    draws.push_back({std::move(u), std::move(n), std::move(u2), std::move(v)});
  }
  CorpusResult res;
  res.schrodinger.resize(draws.size());
  res.wave.resize(draws.size());
  parallel_for(draws.size(), threads, [&](std::size_t i) {
    res.schrodinger[i] = bilinear_ratio_schrodinger(draws[i].u, draws[i].n, pt, p);
    res.wave[i] = bilinear_ratio_wave(draws[i].u2, draws[i].v, pt, p);
  });
  for (std::size_t i = 0; i < draws.size(); ++i) {
    res.schrodinger[i].description = "draw " + std::to_string(i);
    res.wave[i].description = "draw " + std::to_string(i);
    res.max_schrodinger = std::max(res.max_schrodinger, res.schrodinger[i].ratio);
    res.max_wave = std::max(res.max_wave, res.wave[i].ratio);
  }
  return res;
}

}  // namespace qzs
