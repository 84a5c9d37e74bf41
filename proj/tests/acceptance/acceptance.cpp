// One pass/fail line per acceptance criterion. Exit status is the number of
// failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "../tools/cli.hpp"
#include "qzs/bilinear.hpp"
#include "qzs/diagnostics.hpp"
#include "qzs/estimates.hpp"
#include "qzs/initial_data.hpp"
#include "qzs/semiclassical.hpp"
#include "qzs/solver.hpp"
#include "regression_constants.hpp"

using namespace qzs;
namespace fs = std::filesystem;

namespace {

int failures = 0;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(int id, bool ok, const std::string& detail) {
  std::printf("criterion %d: %s  %s\n", id, ok ? "PASS" : "FAIL", detail.c_str());
  if (!ok) ++failures;
}

std::string format(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

void exact_solution() {
  const auto t0 = std::chrono::steady_clock::now();
  const TorusGrid g(64);
  const PropagatorParams p{1.0, 1.0, 0.5};
  SolverConfig cfg;
  cfg.dt = 1e-3;
  cfg.record_stride = 50;
  const Trajectory tr = solve(plane_wave_data(g, 4), p, 1.0, cfg);
  const double secs = seconds_since(t0);
  double err = 0.0;
  for (const QZSState& s : tr) {
    SpectralField exact(g);
    exact(4) = std::polar(1.0, -s.time * (16.0 + 0.25 * 256.0));
    err = std::max({err, l2_norm(s.u - exact), l2_norm(s.n)});
  }
  report(1, err <= 1e-8 && secs < 5.0, format("max H^0 error %.3g (<= 1e-8), %.2f s (< 5 s)", err, secs));
}

double energy_drift(const Trajectory& tr, const PropagatorParams& p, double* mass_drift) {
  const GaugeRecord& rec = tr.front().gauge;
  const double m0 = mass(tr.front());
  const double e0 = energy(regauge(tr.front(), rec), p).energy;
  double de = 0.0, dm = 0.0;
  for (const QZSState& s : tr) {
    dm = std::max(dm, std::abs(mass(s) - m0) / m0);
    de = std::max(de, std::abs(energy(regauge(s, rec), p).energy - e0) / std::abs(e0));
  }
  if (mass_drift) *mass_drift = dm;
  return de;
}

void conservation() {
  const TorusGrid g(64);
  const PropagatorParams p{1.0, 1.0, 0.5};
  const InitialData data = random_smooth_data(g, 2024);
  SolverConfig cfg;
  cfg.dt = 1e-3;
  cfg.record_stride = 10;
  double dm = 0.0;
  const double fine = energy_drift(solve(data, p, 1.0, cfg), p, &dm);
  cfg.dt = 2e-3;
  cfg.record_stride = 5;
  const double coarse = energy_drift(solve(data, p, 1.0, cfg), p, nullptr);
  const double ratio = coarse / fine;
  report(2, dm <= 1e-10 && fine <= 1e-6 && ratio >= 3.5,
         format("mass drift %.3g (<= 1e-10), energy drift %.3g (<= 1e-6), halving gain %.2f (>= 3.5)",
                dm, fine, ratio));
}

void discontinuity() {
  const auto t0 = std::chrono::steady_clock::now();
  const double period = 2.0 * kPi / (0.01 * 4096.0);
  std::vector<double> t(4001);
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = period * double(i) / double(t.size() - 1);
  const DiscontinuityResult r = discontinuity_demo(8, 0.1, 0.0, 0.0, t);
  const double secs = seconds_since(t0);
  report(3, r.value >= 1.999 && secs < 1.0, format("sup %.6f (>= 1.999), %.3f s (< 1 s)", r.value, secs));
}

void semiclassical() {
  const auto t0 = std::chrono::steady_clock::now();
  const TorusGrid g(128);
  SolverConfig cfg;
  cfg.dt = 1e-3;
  const SemiclassicalResult r = semiclassical_experiment(
      [&](double) { return smooth_reference_data(g); }, {0.4, 0.2, 0.1, 0.05}, {1.0, 1.0, 0.0}, 1.0,
      4.0, cfg, 4);
  const double secs = seconds_since(t0);
  bool decreasing = true;
  double lo = INFINITY, hi = 0.0;
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    if (i > 0 && !(r.rows[i].error < r.rows[i - 1].error)) decreasing = false;
    lo = std::min(lo, r.rows[i].h10_bound);
    hi = std::max(hi, r.rows[i].h10_bound);
  }
  const double shrink = r.rows.back().error / r.rows.front().error;
  const double spread = (hi - lo) / lo;
  report(4, decreasing && shrink < 0.1 && spread < 0.1 && secs < 120.0,
         format("decreasing %s, last/first %.3g (< 0.1), H^{1,0} spread %.3g (< 0.1), %.1f s (< 120 s)",
                decreasing ? "yes" : "no", shrink, spread, secs));
}

void resonance() {
  const ResonanceSurvey s = resonance_survey(1, 10000, 64, 1e6, {1.0, 1.0, 0.5});
  report(5, s.max_defect <= 1e-9 && s.bound_failures == 0,
         format("%d draws, max defect %.3g (<= 1e-9), bound failures %d", s.draws, s.max_defect,
                s.bound_failures));
}

void sums_and_bounds() {
  const PropagatorParams p{1.0, 1.0, 1.0};
  const double e = 4.0 * 0.49 - 1.0;
  const std::vector<SigmaSample> smp = sigma_samples(12345, 1000, 32, p);
  const std::vector<SigmaRow> a = sigma_scan(smp, e, e, 1024, p, 4);
  const std::vector<SigmaRow> b = sigma_scan(smp, e, e, 2048, p, 4);
  double a1 = 0, b1 = 0, a2 = 0, b2 = 0;
  for (std::size_t i = 0; i < smp.size(); ++i) {
    a1 = std::max(a1, a[i].s1.value);
    b1 = std::max(b1, b[i].s1.value);
    a2 = std::max(a2, a[i].s2.value);
    b2 = std::max(b2, b[i].s2.value);
  }
  const double c1 = std::abs(a1 - b1) / a1, c2 = std::abs(a2 - b2) / a2;
  const HScanResult h = h_lower_bound_scan(p, 2000);
  const double target = 0.9 * p.eps * p.eps / 8.0;
  report(6, c1 < 0.01 && c2 < 0.01 && h.c4_measured >= target,
         format("sigma1 change %.3g, sigma2 change %.3g (< 0.01), c4 %.4f (>= %.4f)", c1, c2,
                h.c4_measured, target));
}

void corpus() {
  const CorpusResult c = bilinear_corpus(regression::kCorpusSeed, {0.0, 0.0, 0.49, 0.5}, {1.0, 1.0, 1.0}, {}, 4);
  const double ds = std::abs(c.max_schrodinger / regression::kBilinearSchrodingerMax - 1.0);
  const double dw = std::abs(c.max_wave / regression::kBilinearWaveMax - 1.0);
  report(7, ds <= 0.05 && dw <= 0.05,
         format("Schrodinger max %.6f (frozen %.6f), wave max %.6f (frozen %.6f)", c.max_schrodinger,
                regression::kBilinearSchrodingerMax, c.max_wave, regression::kBilinearWaveMax));
}

void necessity() {
  const auto t0 = std::chrono::steady_clock::now();
  const PropagatorParams p{1.0, 1.0, 1.0};
  const std::vector<long> N{8, 16, 32, 64, 128};
  double inside = -INFINITY;
  for (int pair = 1; pair <= 8; ++pair)
    inside = std::max(inside, necessity_scan(pair, {0.0, 0.0, 0.5, 0.5}, p, N).fitted_exponent);
  double low_l = -INFINITY, wide = -INFINITY;
  for (int pair = 1; pair <= 8; ++pair) {
    low_l = std::max(low_l, necessity_scan(pair, {0.0, -1.5, 0.5, 0.5}, p, N).fitted_exponent);
    wide = std::max(wide, necessity_scan(pair, {3.0, 0.0, 0.5, 0.5}, p, N).fitted_exponent);
  }
  const double secs = seconds_since(t0);
  report(8, inside <= 0.05 && low_l >= 0.1 && wide >= 0.1 && secs < 30.0,
         format("inside max %.3f (<= 0.05), l=-1.5 max %.3f, s-l=3 max %.3f (>= 0.1), %.1f s (< 30 s)",
                inside, low_l, wide, secs));
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

void determinism() {
  const fs::path dir = fs::temp_directory_path() / ("qzs_acceptance_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  std::ostringstream sink;
  const int ra = cli::run({"qzs_lab", "--out", (dir / "a").string(), "--seed", "12345", "estimates"}, sink, sink);
  const int rb = cli::run({"qzs_lab", "--out", (dir / "b").string(), "--seed", "12345", "--threads", "4",
                           "estimates"},
                          sink, sink);
  int files = 0, same = 0;
  if (ra == 0 && rb == 0)
    for (const auto& e : fs::directory_iterator(dir / "a")) {
      ++files;
      if (slurp(e.path()) == slurp(dir / "b" / e.path().filename())) ++same;
    }
  fs::remove_all(dir);
  report(9, ra == 0 && rb == 0 && files > 0 && same == files,
         format("%d of %d output files byte-identical", same, files));
}

}  // namespace

int main() {
  const std::vector<std::function<void()>> criteria{exact_solution, conservation, discontinuity,
                                                    semiclassical,  resonance,    sums_and_bounds,
                                                    corpus,         necessity,    determinism};
  for (const auto& c : criteria) c();
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures;
}
