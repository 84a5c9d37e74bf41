#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "config.hpp"
#include "csv.hpp"
#include "qzs/bilinear.hpp"
#include "qzs/diagnostics.hpp"
#include "qzs/estimates.hpp"
#include "qzs/initial_data.hpp"
#include "qzs/parallel.hpp"
#include "qzs/semiclassical.hpp"

namespace qzs::cli {
namespace {

namespace fs = std::filesystem;

struct Invocation {
  std::string config_path;
  std::string out_dir = "qzs_out";
  std::optional<std::uint64_t> seed;
  int threads = 1;
  bool discontinuity = false;
};

using Files = std::vector<std::pair<std::string, std::string>>;

Config load_config(const Invocation& inv) {
  return inv.config_path.empty() ? Config{} : Config::load(inv.config_path);
}

// Library errors raised while checking parameters are usage errors.
template <class F>
auto validated(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

void write_files(const std::string& dir, const Files& files) {
  fs::create_directories(dir);
  for (const auto& [name, text] : files) {
    const fs::path path = fs::path(dir) / name;
    std::ofstream f(path, std::ios::binary);
    f << text;
    if (!f) throw std::runtime_error("cannot write " + path.string());
  }
}

PropagatorParams read_params(const Config& c, double eps_default) {
  PropagatorParams p{c.get_double("params.alpha", 1.0), c.get_double("params.beta", 1.0),
                     c.get_double("params.eps", eps_default)};
  validated([&] { p.validate(); });
  return p;
}

SolverConfig read_solver(const Config& c) {
  SolverConfig s;
  s.dt = c.get_double("solver.dt", 1e-3);
  const std::string scheme = c.get_string("solver.scheme", "strang");
  if (scheme == "strang") s.scheme = Scheme::strang;
  else if (scheme == "picard") s.scheme = Scheme::picard;
  else throw UsageError("solver.scheme must be strang or picard");
  const std::string quad = c.get_string("solver.quadrature", "midpoint");
  if (quad == "midpoint") s.quadrature = Quadrature::midpoint;
  else if (quad == "trapezoid") s.quadrature = Quadrature::trapezoid;
  else throw UsageError("solver.quadrature must be midpoint or trapezoid");
  s.picard_tol = c.get_double("solver.picard_tol", 1e-12);
  s.picard_maxiter = int(c.get_long("solver.picard_maxiter", 50));
  s.dealias = c.get_bool("solver.dealias", true);
  s.record_stride = int(c.get_long("solver.record_stride", 1));
  validated([&] { s.validate(); });
  return s;
}

double read_final_time(const Config& c) {
  const double T = c.get_double("solver.T", 1.0);
  if (!(T > 0.0)) throw UsageError("solver.T must be positive");
  return T;
}

TorusGrid read_grid(const Config& c, std::optional<long> fallback) {
  if (!fallback) c.require("grid.size");
  const long M = c.get_long("grid.size", fallback.value_or(0));
  if (M < 8 || M > (1L << 20) || M % 2 != 0)
    throw UsageError("grid.size must be an even integer in [8, 2^20]");
  return TorusGrid(int(M));
}

std::function<InitialData()> read_data(const Config& c, const TorusGrid& grid,
                                       const Invocation& inv, const std::string& kind_default) {
  const std::string kind = c.get_string("data.kind", kind_default);
  if (kind == "plane_wave") {
    const long N = c.get_long("data.N", 4);
    const double amp = c.get_double("data.amplitude", 1.0);
    if (!grid.contains(N) || !grid.contains(-N)) throw UsageError("data.N outside the grid");
    return [=] { return plane_wave_data(grid, int(N), amp); };
  }
  if (kind == "random") {
    const std::uint64_t seed = inv.seed.value_or(c.get_u64("data.seed", 1));
    const long modes = c.get_long("data.max_mode", 6);
    const double size = c.get_double("data.size", 1.0);
    if (modes < 1 || modes > grid.dealias_cutoff())
      throw UsageError("data.max_mode must lie in [1, grid.size/3]");
    if (!(size > 0.0)) throw UsageError("data.size must be positive");
    return [=] { return random_smooth_data(grid, seed, int(modes), size); };
  }
  if (kind == "reference") return [=] { return smooth_reference_data(grid); };
  throw UsageError("data.kind must be plane_wave, random or reference");
}

double relative_drift(double value, double initial) {
  return std::abs(value - initial) / std::max(std::abs(initial), 1e-300);
}

std::vector<ConservedQuantities> conserved_series(const Trajectory& traj,
                                                  const PropagatorParams& p) {
  // Means evolve as n_mean(t) = n0_mean + t n1_mean; remove them before
  // evaluating the energy.
  const QZSState& first = traj.front();
  const GaugeRecord record{first.n.mean() - first.time * first.dn.mean(), first.dn.mean()};
  std::vector<ConservedQuantities> rows;
  rows.reserve(traj.size());
  for (const QZSState& s : traj) rows.push_back(energy(regauge(s, record), p));
  return rows;
}

std::string drift_summary(const std::vector<ConservedQuantities>& rows) {
  double dm = 0.0, de = 0.0;
  for (const ConservedQuantities& q : rows) {
    dm = std::max(dm, relative_drift(q.mass, rows.front().mass));
    de = std::max(de, relative_drift(q.energy, rows.front().energy));
  }
  return "final_time=" + fmt(rows.back().time) + " max_mass_drift=" + fmt(dm) +
         " max_energy_drift=" + fmt(de);
}

const std::set<std::string> kParamKeys{"params.alpha", "params.beta", "params.eps"};
const std::set<std::string> kSolverKeys{"solver.dt",         "solver.T",
                                        "solver.scheme",     "solver.quadrature",
                                        "solver.picard_tol", "solver.picard_maxiter",
                                        "solver.dealias",    "solver.record_stride"};
const std::set<std::string> kDataKeys{"data.kind",     "data.N",    "data.amplitude",
                                      "data.max_mode", "data.size", "data.seed"};

std::set<std::string> keys(std::initializer_list<std::set<std::string>> groups,
                           std::initializer_list<std::string> extra = {}) {
  std::set<std::string> all(extra);
  for (const auto& g : groups) all.insert(g.begin(), g.end());
  return all;
}

// --- simulate ------------------------------------------------------------

int run_simulate(const Invocation& inv, std::ostream& out, std::ostream& err) {
  const Config c = load_config(inv);
  c.require_known(keys({kParamKeys, kSolverKeys, kDataKeys},
                       {"grid.size", "exponents.s", "exponents.l"}));
  const TorusGrid grid = read_grid(c, std::nullopt);
  const PropagatorParams p = read_params(c, 0.5);
  const SolverConfig sc = read_solver(c);
  const double T = read_final_time(c);
  const auto make_data = read_data(c, grid, inv, "plane_wave");
  const double s = c.get_double("exponents.s", 2.0), l = c.get_double("exponents.l", 1.0);
  const RegionMembership region = region_membership(s, l);
  if (!region.in_omega_l)
    err << "warning: (s,l) = (" << fmt(s) << "," << fmt(l) << ") outside Omega_L\n";

  const Trajectory traj = solve(make_data(), p, T, sc);
  const auto rows = conserved_series(traj, p);
  write_files(inv.out_dir, {{"trajectory.csv", trajectory_csv(traj)},
                            {"conserved.csv", conserved_csv(rows)}});
  out << drift_summary(rows) << " omega_L=" << (region.in_omega_l ? "yes" : "no")
      << " omega_G=" << (region.in_omega_g ? "yes" : "no") << '\n';
  return kExitOk;
}

// --- conserve ------------------------------------------------------------

int run_conserve(const Invocation& inv, std::ostream& out, std::ostream&) {
  const Config c = load_config(inv);
  c.require_known(keys({kParamKeys}, {"conserve.trajectory"}));
  c.require("conserve.trajectory");
  const PropagatorParams p = read_params(c, 0.5);
  const std::string path = c.get_string("conserve.trajectory", "");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read trajectory '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  const Trajectory traj = parse_trajectory_csv(ss.str());
  const auto rows = conserved_series(traj, p);
  write_files(inv.out_dir, {{"conserved.csv", conserved_csv(rows)}});
  out << drift_summary(rows) << '\n';
  return kExitOk;
}

// --- semiclassical -------------------------------------------------------

int run_discontinuity(const Config& c, const Invocation& inv, std::ostream& out,
                      std::ostream& err) {
  const long N = c.get_long("discontinuity.N", 8);
  const double eps = c.get_double("discontinuity.eps", 0.1);
  const double eps0 = c.get_double("discontinuity.eps0", 0.0);
  const double s = c.get_double("discontinuity.s", 0.0);
  const long points = c.get_long("discontinuity.t_points", 4001);
  if (N == 0) throw UsageError("discontinuity.N must be nonzero");
  if (eps < 0.0 || eps0 < 0.0 || eps == eps0)
    throw UsageError("discontinuity.eps and eps0 must be distinct and nonnegative");
  if (points < 2) throw UsageError("discontinuity.t_points must be at least 2");
  const double n4 = std::pow(double(N), 4.0);
  const double period = 2.0 * kPi / (std::abs(eps * eps - eps0 * eps0) * n4);
  std::vector<double> t(static_cast<std::size_t>(points));
  for (long i = 0; i < points; ++i) t[std::size_t(i)] = period * double(i) / double(points - 1);

  const DiscontinuityResult r = discontinuity_demo(N, eps, eps0, s, t);
  if (r.warning) err << "warning: " << *r.warning << '\n';
  CsvBuilder csv;
  csv.header({"N", "eps", "eps0", "s", "sup"});
  csv.row({double(N), eps, eps0, s, r.value});
  write_files(inv.out_dir, {{"discontinuity.csv", csv.str()}});
  out << "discontinuity_sup=" << fmt(r.value) << '\n';
  return kExitOk;
}

int run_semiclassical(const Invocation& inv, std::ostream& out, std::ostream& err) {
  const Config c = load_config(inv);
  c.require_known(keys({kParamKeys, kSolverKeys, kDataKeys},
                       {"grid.size", "semiclassical.eps_list", "semiclassical.s",
                        "semiclassical.mode", "discontinuity.N", "discontinuity.eps",
                        "discontinuity.eps0", "discontinuity.s", "discontinuity.t_points"}));
  const std::string mode = c.get_string("semiclassical.mode", "sweep");
  if (mode != "sweep" && mode != "discontinuity")
    throw UsageError("semiclassical.mode must be sweep or discontinuity");
  if (inv.discontinuity || mode == "discontinuity") return run_discontinuity(c, inv, out, err);

  if (c.has("params.eps")) throw UsageError("params.eps is not used here; set semiclassical.eps_list");
  const TorusGrid grid = read_grid(c, 128);
  const PropagatorParams p = read_params(c, 0.0);
  const SolverConfig sc = read_solver(c);
  const double T = read_final_time(c);
  const auto make_data = read_data(c, grid, inv, "reference");
  const std::vector<double> eps = c.get_doubles("semiclassical.eps_list", {0.4, 0.2, 0.1, 0.05});
  const double s = c.get_double("semiclassical.s", 4.0);
  if (eps.size() < 3) throw UsageError("semiclassical.eps_list needs at least 3 entries");
  for (std::size_t i = 0; i < eps.size(); ++i) {
    if (!(eps[i] > 0.0)) throw UsageError("semiclassical.eps_list entries must be positive");
    if (i > 0 && !(eps[i] < eps[i - 1]))
      throw UsageError("semiclassical.eps_list must be strictly decreasing");
  }

  const InitialData data = make_data();
  const SemiclassicalResult r = semiclassical_experiment(
      [&](double) { return data; }, eps, p, T, s, sc, inv.threads);
  CsvBuilder csv;
  csv.header({"eps", "error", "h10_bound"});
  for (const SemiclassicalRow& row : r.rows) csv.row({row.eps, row.error, row.h10_bound});
  csv.comment("fitted_rate=" + fmt(r.fitted_rate) + " fit_residual=" + fmt(r.fit_residual));
  write_files(inv.out_dir, {{"semiclassical.csv", csv.str()}});
  out << "rows=" << r.rows.size() << " final_error=" << fmt(r.rows.back().error)
      << " fitted_rate=" << fmt(r.fitted_rate) << '\n';
  return kExitOk;
}

// --- estimates -----------------------------------------------------------

ExponentPoint read_point(const Config& c, const std::string& section, ExponentPoint def) {
  return {c.get_double(section + ".s", def.s), c.get_double(section + ".l", def.l),
          c.get_double(section + ".b", def.b), c.get_double(section + ".rho", def.rho)};
}

const char* verdict(double exponent, const NecessityConfig& cfg) {
  if (exponent <= cfg.bounded_threshold) return "bounded";
  if (exponent >= cfg.violation_threshold) return "violated";
  return "inconclusive";
}

int run_estimates(const Invocation& inv, std::ostream& out, std::ostream&) {
  const Config c = load_config(inv);
  c.require_known(keys(
      {kParamKeys},
      {"exponents.s", "exponents.l", "exponents.b", "exponents.rho", "sigma.e1", "sigma.e2",
       "sigma.samples", "sigma.k_range", "sigma.K_max", "bounds.K_scan", "bounds.resonance_draws",
       "corpus.seed", "corpus.draws", "corpus.grid", "corpus.dtau", "corpus.k_max",
       "corpus.max_modes", "corpus.max_offset", "necessity.s", "necessity.l", "necessity.b",
       "necessity.rho", "necessity.N_list", "necessity.pairs", "necessity.dtau",
       "necessity.bounded", "necessity.violation", "cases.enabled", "cases.K_max",
       "cases.k_outer"}));
  const PropagatorParams p = read_params(c, 1.0);
  if (!(p.eps > 0.0)) throw UsageError("params.eps must be positive for the estimate scans");
  const ExponentPoint pt = read_point(c, "exponents", {});
  validated([&] { check_bilinear_hypotheses(pt); });

  const double e1 = c.get_double("sigma.e1", 4.0 * pt.b - 1.0);
  const double e2 = c.get_double("sigma.e2", 4.0 * pt.b - 1.0);
  if (!(e1 > 0.25)) throw UsageError("e1 must exceed 1/4");
  if (!(e2 > 1.0 / 3.0)) throw UsageError("e2 must exceed 1/3");
  const long samples = c.get_long("sigma.samples", 1000);
  const long k_range = c.get_long("sigma.k_range", 32);
  const long K_max = c.get_long("sigma.K_max", 1024);
  if (samples < 1 || k_range < 1 || K_max < 1)
    throw UsageError("sigma.samples, sigma.k_range and sigma.K_max must be positive");
  const long K_scan = c.get_long("bounds.K_scan", 2000);
  const long res_draws = c.get_long("bounds.resonance_draws", 10000);
  if (res_draws < 1) throw UsageError("bounds.resonance_draws must be positive");

  const std::uint64_t seed = inv.seed.value_or(c.get_u64("corpus.seed", 12345));
  CorpusConfig cc;
  cc.draws = int(c.get_long("corpus.draws", cc.draws));
  cc.grid_size = int(c.get_long("corpus.grid", cc.grid_size));
  cc.dtau = c.get_double("corpus.dtau", cc.dtau);
  cc.k_max = c.get_long("corpus.k_max", cc.k_max);
  cc.max_modes = int(c.get_long("corpus.max_modes", cc.max_modes));
  cc.max_offset = c.get_double("corpus.max_offset", cc.max_offset);
  if (cc.draws < 1 || cc.max_modes < 1 || !(cc.dtau > 0.0) || cc.k_max < 1 ||
      !(cc.max_offset >= 0.0) || cc.grid_size < 8 || cc.grid_size % 2 != 0 ||
      2 * cc.k_max >= cc.grid_size / 2)
    throw UsageError("corpus settings out of range (need 2 k_max < grid/2)");

  const ExponentPoint npt = read_point(c, "necessity", {0.0, 0.0, 0.5, 0.5});
  std::vector<long> N_list = c.get_longs("necessity.N_list", {8, 16, 32, 64, 128});
  std::vector<long> pairs = c.get_longs("necessity.pairs", {1, 2, 3, 4, 5, 6, 7, 8});
  NecessityConfig nc;
  nc.dtau = c.get_double("necessity.dtau", nc.dtau);
  nc.bounded_threshold = c.get_double("necessity.bounded", nc.bounded_threshold);
  nc.violation_threshold = c.get_double("necessity.violation", nc.violation_threshold);
  if (N_list.size() < 4) throw UsageError("necessity.N_list needs at least 4 entries");
  for (std::size_t i = 0; i < N_list.size(); ++i)
    if (N_list[i] < 1 || (i > 0 && N_list[i] <= N_list[i - 1]))
      throw UsageError("necessity.N_list must be positive and increasing");
  for (long pr : pairs)
    if (pr < 1 || pr > 8) throw UsageError("necessity.pairs entries must lie in 1..8");
  if (!(nc.dtau > 0.0)) throw UsageError("necessity.dtau must be positive");
  if (!(npt.rho > 0.0 && npt.rho <= 1.0)) throw UsageError("necessity.rho must lie in (0, 1]");

  const bool cases = c.get_bool("cases.enabled", false);
  const long cases_K = c.get_long("cases.K_max", 64);
  TauSampling ts;
  ts.k_outer = c.get_long("cases.k_outer", 16);
  if (cases_K < 1 || ts.k_outer < 1) throw UsageError("cases.K_max and cases.k_outer must be positive");

  // Sigma sums.
  const auto sig = sigma_scan(sigma_samples(seed, int(samples), k_range, p), e1, e2, K_max, p,
                              inv.threads);
  CsvBuilder sigma_csv;
  sigma_csv.header({"k", "tau", "sigma1", "sigma1_tail", "sigma2", "sigma2_tail"});
  double sup1 = 0.0, sup2 = 0.0;
  for (const SigmaRow& r : sig) {
    sigma_csv.row({double(r.at.k), r.at.tau, r.s1.value, r.s1.tail_bound, r.s2.value,
                   r.s2.tail_bound});
    sup1 = std::max(sup1, r.s1.value);
    sup2 = std::max(sup2, r.s2.value);
  }

  // Lower bounds and the resonance identity.
  const HScanResult h = h_lower_bound_scan(p, K_scan);
  const ResonanceSurvey rs = resonance_survey(seed, int(res_draws), 64, 1e4, p);
  CsvBuilder bounds;
  bounds.header({"quantity", "value"});
  auto item = [&](const std::string& name, double v) { bounds.row({name, fmt(v)}); };
  item("sigma1_sup", sup1);
  item("sigma2_sup", sup2);
  item("C1", double(h.C1));
  item("C", h.C_threshold);
  item("h_over_k2_inf", h.c_measured);
  item("k2h_over_k4_inf", h.c4_measured);
  item("k2h_over_k4_target", p.eps * p.eps / 8.0);
  item("k4_region_start", h.c4_region_start);
  item("resonance_max_defect", rs.max_defect);
  item("resonance_bound_failures", double(rs.bound_failures));

  // Bilinear corpus.
  const CorpusResult corpus = bilinear_corpus(seed, pt, p, cc, inv.threads);
  auto report_csv = [](const std::vector<EstimateReport>& reps) {
    CsvBuilder csv;
    csv.header({"draw", "lhs", "rhs", "ratio"});
    for (std::size_t i = 0; i < reps.size(); ++i)
      csv.row({double(i), reps[i].lhs, reps[i].rhs, reps[i].ratio});
    return csv.str();
  };
  item("bilinear_schrodinger_max", corpus.max_schrodinger);
  item("bilinear_wave_max", corpus.max_wave);

  // Necessity scans.
  std::vector<EstimateReport> nec(pairs.size());
  parallel_for(pairs.size(), inv.threads, [&](std::size_t i) {
    nec[i] = necessity_scan(int(pairs[i]), npt, p, N_list, nc);
  });
  CsvBuilder nec_csv;
  nec_csv.header({"pair", "N", "ratio", "fitted_exponent", "fit_residual", "verdict"});
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = 0; j < nec[i].N_values.size(); ++j)
      nec_csv.row({std::to_string(pairs[i]), fmt(nec[i].N_values[j]), fmt(nec[i].ratios[j]),
                   fmt(nec[i].fitted_exponent), fmt(nec[i].fit_residual),
                   verdict(nec[i].fitted_exponent, nc)});

  Files files{{"sigma.csv", sigma_csv.str()},
              {"bounds.csv", bounds.str()},
              {"bilinear_schrodinger.csv", report_csv(corpus.schrodinger)},
              {"bilinear_wave.csv", report_csv(corpus.wave)},
              {"necessity.csv", nec_csv.str()}};
  if (cases) {
    CsvBuilder csv;
    csv.header({"case", "sup", "arg_k", "arg_tau"});
    for (CaseQuantity q : {CaseQuantity::I, CaseQuantity::II, CaseQuantity::III,
                           CaseQuantity::IV, CaseQuantity::V}) {
      const CaseQuantityResult r = case_quantity_sup(q, pt, p, cases_K, ts, inv.threads);
      csv.row({std::string(to_string(q)), fmt(r.sup), std::to_string(r.arg_k), fmt(r.arg_tau)});
    }
    files.push_back({"cases.csv", csv.str()});
  }
  write_files(inv.out_dir, files);

  out << "sigma1_sup=" << fmt(sup1) << " sigma2_sup=" << fmt(sup2)
      << " c4=" << fmt(h.c4_measured) << " bilinear_max=" << fmt(corpus.max_schrodinger) << ","
      << fmt(corpus.max_wave) << " necessity=";
  for (std::size_t i = 0; i < pairs.size(); ++i)
    out << (i ? "," : "") << pairs[i] << ":" << fmt(nec[i].fitted_exponent);
  out << '\n';
  return kExitOk;
}

// --- counterexample ------------------------------------------------------

int run_counterexample(const Invocation& inv, std::ostream& out, std::ostream&) {
  const Config c = load_config(inv);
  c.require_known(keys({kParamKeys},
                       {"counterexample.index", "counterexample.member", "counterexample.N",
                        "counterexample.dtau", "exponents.s", "exponents.l", "exponents.b"}));
  const PropagatorParams p = read_params(c, 1.0);
  const long index = c.get_long("counterexample.index", 1);
  const std::string member = c.get_string("counterexample.member", "u");
  const long N = c.get_long("counterexample.N", 16);
  const double dtau = c.get_double("counterexample.dtau", 1.0 / 16.0);
  const double s = c.get_double("exponents.s", 0.0), l = c.get_double("exponents.l", 0.0),
               b = c.get_double("exponents.b", 0.5);
  FamilyMember which;
  if (member == "u") which = FamilyMember::u;
  else if (member == "n") which = FamilyMember::n;
  else if (member == "v") which = FamilyMember::v;
  else throw UsageError("counterexample.member must be u, n or v");
  if (N < 1 || N > 4096) throw UsageError("counterexample.N must lie in [1, 4096]");
  if (!(dtau > 0.0)) throw UsageError("counterexample.dtau must be positive");
  const SpacetimeField f =
      validated([&] { return counterexample_family(int(index), which, N, p, dtau); });

  const bool wave = which == FamilyMember::n;
  const WeightKind w{wave ? DispersionKind::wave : DispersionKind::schrodinger, p};
  const NormResult norm = xsb_norm(f, wave ? l : s, b, w);
  CsvBuilder csv;
  csv.header({"k", "tau", "re", "im"});
  for (const auto& [k, segs] : f.segments())
    for (const TauSegment& seg : segs)
      for (std::size_t i = 0; i < seg.values.size(); ++i) {
        const cplx v = seg.values[i];
        if (v != cplx(0.0)) csv.row({double(k), f.tau(seg.j0 + long(i)), v.real(), v.imag()});
      }
  write_files(inv.out_dir, {{"counterexample.csv", csv.str()}});
  out << "norm=" << fmt(norm.value) << " tail_fraction=" << fmt(norm.tail_fraction)
      << " space=" << (wave ? "X_W" : "X_S") << '\n';
  return kExitOk;
}

// --- help text -----------------------------------------------------------

const char* kCommonHelp = R"(Config files hold key = value lines under [section] headers.
Shared keys and defaults:
  [params]  alpha = 1, beta = 1, eps (simulate 0.5, estimates 1)
  [solver]  dt = 1e-3, T = 1, scheme = strang|picard, quadrature = midpoint|trapezoid,
            picard_tol = 1e-12, picard_maxiter = 50, dealias = true, record_stride = 1
  [data]    kind = plane_wave|random|reference, N = 4, amplitude = 1,
            max_mode = 6, size = 1 (H^2 x H^1 x L^2 size), seed = 1
QZS_LAB_THREADS overrides --threads. Exit status: 0 ok, 1 runtime failure, 2 usage.)";

const char* kSimulateHelp = R"(Keys: [grid] size (required); [exponents] s = 2, l = 1 (Omega_L check);
[params], [solver], [data] (kind defaults to plane_wave).
Writes trajectory.csv and conserved.csv.)";

const char* kConserveHelp = R"(Keys: [conserve] trajectory = PATH (required); [params].
Writes conserved.csv.)";

const char* kSemiclassicalHelp = R"(Keys: [grid] size = 128; [params] alpha, beta;
[semiclassical] eps_list = 0.4,0.2,0.1,0.05, s = 4, mode = sweep|discontinuity;
[solver]; [data] (kind defaults to reference);
[discontinuity] N = 8, eps = 0.1, eps0 = 0, s = 0, t_points = 4001.
Writes semiclassical.csv (or discontinuity.csv).)";

const char* kEstimatesHelp = R"(Keys: [params] (eps = 1); [exponents] s = 0, l = 0, b = 0.49, rho = 0.5;
[sigma] e1 = e2 = 4b-1, samples = 1000, k_range = 32, K_max = 1024;
[bounds] K_scan = 2000, resonance_draws = 10000;
[corpus] seed = 12345, draws = 200, grid = 32, dtau = 0.125, k_max = 6,
         max_modes = 3, max_offset = 3;
[necessity] s = 0, l = 0, b = 0.5, rho = 0.5, N_list = 8,16,32,64,128,
            pairs = 1,...,8, dtau = 0.0625, bounded = 0.05, violation = 0.1;
[cases] enabled = false, K_max = 64, k_outer = 16.
Writes sigma.csv, bounds.csv, bilinear_schrodinger.csv, bilinear_wave.csv,
necessity.csv and, when enabled, cases.csv.)";

const char* kCounterexampleHelp = R"(Keys: [counterexample] index = 1, member = u|n|v, N = 16, dtau = 0.0625;
[exponents] s = 0, l = 0, b = 0.5; [params] (eps = 1).
Writes counterexample.csv.)";

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum Zakharov experiment runner", args.empty() ? "qzs_lab" : args[0]};
  app.footer(kCommonHelp);
  app.require_subcommand(1, 1);
  Invocation inv;
  long threads = 1;
  app.add_option("--config", inv.config_path, "Config file")->check(CLI::ExistingFile);
  app.add_option("--out", inv.out_dir, "Output directory")->capture_default_str();
  app.add_option("--seed", inv.seed, "Seed overriding the config seeds");
  app.add_option("--threads", threads, "Worker threads")->capture_default_str();
  app.fallthrough();

  struct Sub {
    const char* name;
    const char* desc;
    const char* help;
    int (*fn)(const Invocation&, std::ostream&, std::ostream&);
  };
  const Sub subs[] = {
      {"simulate", "Integrate one trajectory", kSimulateHelp, run_simulate},
      {"conserve", "Conserved quantities of a trajectory CSV", kConserveHelp, run_conserve},
      {"semiclassical", "Errors against the eps = 0 flow", kSemiclassicalHelp, run_semiclassical},
      {"estimates", "Sigma sums, lower bounds, bilinear and necessity scans", kEstimatesHelp, run_estimates},
      {"counterexample", "Export one counterexample field", kCounterexampleHelp,
       run_counterexample},
  };
  std::map<CLI::App*, const Sub*> lookup;
  for (const Sub& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.desc);
    sub->footer(s.help);
    if (std::string(s.name) == "semiclassical")
      sub->add_flag("--discontinuity", inv.discontinuity, "Run the eps -> eps0 single-mode demo");
    lookup[sub] = &s;
  }

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    const int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (const char* env = std::getenv("QZS_LAB_THREADS"); env && *env)
      threads = parse_long(env, "QZS_LAB_THREADS");
    if (threads < 1 || threads > 1024) throw UsageError("thread count must lie in [1, 1024]");
    inv.threads = int(threads);
    const Sub* s = lookup.at(app.get_subcommands().front());
    return s->fn(inv, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BlowUpDetected& e) {
    err << "error: blow-up detected after t = " << fmt(e.last_finite_time()) << ": " << e.what()
        << '\n';
    return kExitRuntime;
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return kExitRuntime;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
}

}  // namespace qzs::cli
