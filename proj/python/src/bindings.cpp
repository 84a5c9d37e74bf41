#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qzs/bilinear.hpp"
#include "qzs/diagnostics.hpp"
#include "qzs/error.hpp"
#include "qzs/estimates.hpp"
#include "qzs/initial_data.hpp"
#include "qzs/semiclassical.hpp"
#include "qzs/solver.hpp"

namespace py = pybind11;
using namespace qzs;

namespace {

using CArray = py::array_t<cplx, py::array::c_style | py::array::forcecast>;

/// Coefficients listed for k = -M/2, ..., M/2 - 1.
SpectralField to_field(const CArray& a, Realness r = Realness::complex) {
  if (a.ndim() != 1) throw Error(ErrorKind::input_shape, "coefficients must be one-dimensional");
  const TorusGrid g(static_cast<int>(a.shape(0)));
  SpectralField f(g, r);
  const auto v = a.unchecked<1>();
  for (int k = g.min_frequency(); k <= g.max_frequency(); ++k) f(k) = v(k - g.min_frequency());
  if (r == Realness::real) f.enforce_real();
  return f;
}

CArray to_array(const SpectralField& f) {
  const TorusGrid& g = f.grid();
  CArray a(std::vector<py::ssize_t>{g.size()});
  auto v = a.mutable_unchecked<1>();
  for (int k = g.min_frequency(); k <= g.max_frequency(); ++k) v(k - g.min_frequency()) = f(k);
  return a;
}

PropagatorParams params(double alpha, double beta, double eps) {
  PropagatorParams p{alpha, beta, eps};
  p.validate();
  return p;
}

py::tuple data_tuple(const InitialData& d) {
  return py::make_tuple(to_array(d.u0), to_array(d.n0), to_array(d.n1));
}

py::dict trajectory_dict(const Trajectory& tr) {
  const int M = tr.front().u.grid().size();
  const auto rows = static_cast<py::ssize_t>(tr.size());
  py::array_t<double> t(std::vector<py::ssize_t>{rows});
  CArray u({rows, py::ssize_t(M)}), n({rows, py::ssize_t(M)}), dn({rows, py::ssize_t(M)});
  auto tv = t.mutable_unchecked<1>();
  auto uv = u.mutable_unchecked<2>(), nv = n.mutable_unchecked<2>(), dv = dn.mutable_unchecked<2>();
  for (py::ssize_t i = 0; i < rows; ++i) {
    const QZSState& s = tr[std::size_t(i)];
    tv(i) = s.time;
    for (int k = -M / 2; k < M / 2; ++k) {
      uv(i, k + M / 2) = s.u(k);
      nv(i, k + M / 2) = s.n(k);
      dv(i, k + M / 2) = s.dn(k);
    }
  }
  py::dict d;
  d["t"] = t;
  d["u"] = u;
  d["n"] = n;
  d["dn"] = dn;
  return d;
}

py::dict report_dict(const EstimateReport& r) {
  py::dict d;
  d["description"] = r.description;
  d["lhs"] = r.lhs;
  d["rhs"] = r.rhs;
  d["ratio"] = r.ratio;
  d["N"] = r.N_values;
  d["ratios"] = r.ratios;
  d["fitted_exponent"] = r.fitted_exponent;
  d["fit_residual"] = r.fit_residual;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Spectral solver and estimate probes for the quantum Zakharov system on the torus";
  py::register_exception<Error>(m, "QzsError", PyExc_ValueError);

  m.def("plane_wave_data", [](int M, int N, double amplitude) {
    return data_tuple(plane_wave_data(TorusGrid(M), N, amplitude));
  }, py::arg("M"), py::arg("N"), py::arg("amplitude") = 1.0);
  m.def("random_smooth_data", [](int M, std::uint64_t seed, int max_mode, double size) {
    return data_tuple(random_smooth_data(TorusGrid(M), seed, max_mode, size));
  }, py::arg("M"), py::arg("seed"), py::arg("max_mode") = 6, py::arg("size") = 1.0);
  m.def("smooth_reference_data", [](int M) { return data_tuple(smooth_reference_data(TorusGrid(M))); },
        py::arg("M"));

  m.def("sobolev_norm", [](const CArray& c, double s, bool homogeneous) {
    return sobolev_norm(to_field(c), s, homogeneous ? Homogeneity::homogeneous : Homogeneity::inhomogeneous);
  }, py::arg("coeffs"), py::arg("s"), py::arg("homogeneous") = false);

  m.def("solve", [](const CArray& u0, const CArray& n0, const CArray& n1, double T, double dt,
                    double alpha, double beta, double eps, const std::string& scheme, int record_stride) {
    const InitialData d{to_field(u0), to_field(n0, Realness::real), to_field(n1, Realness::real)};
    const PropagatorParams p = params(alpha, beta, eps);
    SolverConfig cfg;
    cfg.dt = dt;
    cfg.record_stride = record_stride;
    if (scheme == "picard") cfg.scheme = Scheme::picard;
    else if (scheme != "strang") throw Error(ErrorKind::input, "scheme must be strang or picard");
    Trajectory tr;
    {
      py::gil_scoped_release nogil;
      tr = solve(d, p, T, cfg);
    }
    return trajectory_dict(tr);
  }, py::arg("u0"), py::arg("n0"), py::arg("n1"), py::arg("T"), py::arg("dt") = 1e-3,
     py::arg("alpha") = 1.0, py::arg("beta") = 1.0, py::arg("eps") = 0.5,
     py::arg("scheme") = "strang", py::arg("record_stride") = 1);

  m.def("conserved", [](const CArray& u, const CArray& n, const CArray& dn, double alpha, double beta,
                        double eps) {
    const QZSState s{to_field(u), to_field(n, Realness::real), to_field(dn, Realness::real), 0.0, {}};
    const ConservedQuantities q = energy(s, params(alpha, beta, eps));
    py::dict d;
    d["mass"] = q.mass;
    d["energy"] = q.energy;
    d["kinetic"] = q.terms.kinetic;
    d["dispersion"] = q.terms.dispersion;
    d["potential"] = q.terms.potential;
    d["wave_kinetic"] = q.terms.wave_kinetic;
    d["wave_dispersion"] = q.terms.wave_dispersion;
    d["interaction"] = q.terms.interaction;
    return d;
  }, py::arg("u"), py::arg("n"), py::arg("dn"), py::arg("alpha") = 1.0, py::arg("beta") = 1.0,
     py::arg("eps") = 0.5);

  m.def("discontinuity_demo", [](long N, double eps, double eps0, double s, const std::vector<double>& t) {
    const DiscontinuityResult r = discontinuity_demo(N, eps, eps0, s, t);
    return py::make_tuple(r.value, r.warning ? py::object(py::str(*r.warning)) : py::object(py::none()));
  }, py::arg("N"), py::arg("eps"), py::arg("eps0"), py::arg("s"), py::arg("t"));

  m.def("semiclassical_experiment", [](const std::vector<double>& eps_list, int M, double T, double s,
                                       double dt, double alpha, double beta, int threads) {
    const InitialData data = smooth_reference_data(TorusGrid(M));
    SolverConfig cfg;
    cfg.dt = dt;
    SemiclassicalResult r;
    {
      py::gil_scoped_release nogil;
      r = semiclassical_experiment([&](double) { return data; }, eps_list, params(alpha, beta, 0.0), T,
                                   s, cfg, threads);
    }
    py::list rows;
    for (const SemiclassicalRow& row : r.rows) rows.append(py::make_tuple(row.eps, row.error, row.h10_bound));
    py::dict d;
    d["rows"] = rows;
    d["fitted_rate"] = r.fitted_rate;
    d["fit_residual"] = r.fit_residual;
    return d;
  }, py::arg("eps_list"), py::arg("M") = 128, py::arg("T") = 1.0, py::arg("s") = 4.0,
     py::arg("dt") = 1e-3, py::arg("alpha") = 1.0, py::arg("beta") = 1.0, py::arg("threads") = 1);

  m.def("region_membership", [](double s, double l) {
    const RegionMembership r = region_membership(s, l);
    return py::make_tuple(r.in_omega_l, r.in_omega_g);
  }, py::arg("s"), py::arg("l"));

  m.def("resonance_survey", [](std::uint64_t seed, int draws, long k_range, double tau_range, double alpha,
                               double beta, double eps) {
    const ResonanceSurvey r = resonance_survey(seed, draws, k_range, tau_range, params(alpha, beta, eps));
    py::dict d;
    d["draws"] = r.draws;
    d["max_defect"] = r.max_defect;
    d["bound_failures"] = r.bound_failures;
    return d;
  }, py::arg("seed"), py::arg("draws") = 10000, py::arg("k_range") = 64, py::arg("tau_range") = 1e6,
     py::arg("alpha") = 1.0, py::arg("beta") = 1.0, py::arg("eps") = 0.5);

  m.def("sigma1", [](long k, double tau, double e1, long K_max, double alpha, double beta, double eps) {
    return sigma1(k, tau, e1, K_max, params(alpha, beta, eps)).value;
  }, py::arg("k"), py::arg("tau"), py::arg("e1"), py::arg("K_max") = 1024, py::arg("alpha") = 1.0,
     py::arg("beta") = 1.0, py::arg("eps") = 1.0);
  m.def("sigma2", [](long k, double tau, double e2, long K_max, double alpha, double beta, double eps) {
    return sigma2(k, tau, e2, K_max, params(alpha, beta, eps)).value;
  }, py::arg("k"), py::arg("tau"), py::arg("e2"), py::arg("K_max") = 1024, py::arg("alpha") = 1.0,
     py::arg("beta") = 1.0, py::arg("eps") = 1.0);

  m.def("h_lower_bound_scan", [](long K_scan, double alpha, double beta, double eps) {
    const HScanResult r = h_lower_bound_scan(params(alpha, beta, eps), K_scan);
    py::dict d;
    d["C1"] = r.C1;
    d["C"] = r.C_threshold;
    d["c"] = r.c_measured;
    d["c4"] = r.c4_measured;
    d["c4_region_start"] = r.c4_region_start;
    return d;
  }, py::arg("K_scan") = 2000, py::arg("alpha") = 1.0, py::arg("beta") = 1.0, py::arg("eps") = 1.0);

  m.def("necessity_scan", [](int pair, double s, double l, double b, double rho, const std::vector<long>& N,
                             double alpha, double beta, double eps) {
    return report_dict(necessity_scan(pair, {s, l, b, rho}, params(alpha, beta, eps), N));
  }, py::arg("pair"), py::arg("s") = 0.0, py::arg("l") = 0.0, py::arg("b") = 0.5, py::arg("rho") = 0.5,
     py::arg("N") = std::vector<long>{8, 16, 32, 64, 128}, py::arg("alpha") = 1.0, py::arg("beta") = 1.0,
     py::arg("eps") = 1.0);

  m.def("bilinear_corpus", [](std::uint64_t seed, double s, double l, double b, double rho, int draws,
                              double alpha, double beta, double eps, int threads) {
    CorpusConfig cfg;
    cfg.draws = draws;
    CorpusResult r;
    {
      py::gil_scoped_release nogil;
      r = bilinear_corpus(seed, {s, l, b, rho}, params(alpha, beta, eps), cfg, threads);
    }
    return py::make_tuple(r.max_schrodinger, r.max_wave);
  }, py::arg("seed") = 12345, py::arg("s") = 0.0, py::arg("l") = 0.0, py::arg("b") = 0.49,
     py::arg("rho") = 0.5, py::arg("draws") = 200, py::arg("alpha") = 1.0, py::arg("beta") = 1.0,
     py::arg("eps") = 1.0, py::arg("threads") = 1);
}
