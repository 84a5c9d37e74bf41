import math

import numpy as np
import pytest

import qzs_lab as q


def test_plane_wave_is_reproduced():
    u0, n0, n1 = q.plane_wave_data(64, 4)
    run = q.solve(u0, n0, n1, T=0.2, dt=1e-3, eps=0.5, record_stride=50)
    assert run["u"].shape == (len(run["t"]), 64)
    omega = 16 + 0.25 * 256
    for t, u in zip(run["t"], run["u"]):
        exact = np.zeros(64, complex)
        exact[4 + 32] = np.exp(-1j * omega * t)
        assert np.linalg.norm(u - exact) < 1e-10
    assert np.abs(run["n"]).max() < 1e-13


def test_mass_is_conserved():
    u0, n0, n1 = q.random_smooth_data(32, 3, max_mode=4)
    run = q.solve(u0, n0, n1, T=0.2, dt=1e-3, record_stride=20)
    mass = np.sum(np.abs(run["u"]) ** 2, axis=1)
    assert np.ptp(mass) < 1e-10 * mass[0]
    c = q.conserved(u0, n0, n1)
    assert c["mass"] == pytest.approx(mass[0])
    parts = sum(c[k] for k in ("kinetic", "dispersion", "potential", "wave_kinetic",
                               "wave_dispersion", "interaction"))
    assert c["energy"] == pytest.approx(parts)


def test_sobolev_norm_of_a_single_mode():
    c = np.zeros(16, complex)
    c[3 + 8] = 2.0
    assert q.sobolev_norm(c, 1.0) == pytest.approx(2.0 * math.sqrt(10.0))
    assert q.sobolev_norm(c, 1.0, homogeneous=True) == pytest.approx(6.0)


def test_discontinuity_reaches_two():
    period = 2 * math.pi / (0.01 * 8 ** 4)
    value, warning = q.discontinuity_demo(8, 0.1, 0.0, 0.0, list(np.linspace(0, period, 4001)))
    assert value >= 1.999
    assert warning is None


def test_estimate_probes():
    r = q.resonance_survey(1, draws=1000)
    assert r["bound_failures"] == 0 and r["max_defect"] <= 1e-9
    assert q.h_lower_bound_scan(400)["c4"] >= 0.9 / 8
    assert q.sigma1(3, 0.0, 0.96) > 0
    assert q.region_membership(2.0, 1.0) == (True, True)
    rep = q.necessity_scan(1, l=-1.5)
    assert rep["fitted_exponent"] > 0.1
    s, w = q.bilinear_corpus(draws=20)
    assert s > 0 and w > 0


def test_semiclassical_errors_decrease():
    r = q.semiclassical_experiment([0.4, 0.2, 0.1], M=32, T=0.5)
    errors = [row[1] for row in r["rows"]]
    assert errors == sorted(errors, reverse=True)


def test_library_errors_become_exceptions():
    with pytest.raises(q.QzsError):
        q.sigma1(1, 0.0, 0.2)
    with pytest.raises(ValueError):
        q.discontinuity_demo(0, 0.1, 0.0, 0.0, [0.0])
