"""Smoke tests for the pydjc module."""

import math

import pytest

pydjc = pytest.importorskip("pydjc")


def test_special_functions():
    assert pydjc.sinc(0.0) == 1.0
    si, ci = pydjc.si_ci(1.0)
    assert si == pytest.approx(0.9460830703671831, rel=1e-12)
    assert ci == pytest.approx(0.3374039229009681, rel=1e-12)
    assert pydjc.expint_ei(1.0) == pytest.approx(1.8951178163559368, rel=1e-12)
    z = pydjc.expint_ei_complex(1j)
    assert z.real == pytest.approx(ci, abs=1e-12)
    assert z.imag == pytest.approx(si + math.pi / 2, abs=1e-12)


def test_kernel_and_rates():
    assert pydjc.kernel_f("ohmic", 1.0, 1.0, 0.0) == pytest.approx(1.0)
    atom, weight = pydjc.spectral_j("impulse", 2.0, 0.3)
    assert atom and weight == 2.0
    assert pydjc.cg_gamma("impulse", 1.0, 1.0, 0.7) == pytest.approx(0.7, rel=1e-12)
    rwa = pydjc.rwa_rates("ohmic", 1.0, 1.0)
    assert rwa["suitable"]
    assert rwa["gamma"] == pytest.approx(2 * math.pi * math.exp(-1), rel=1e-12)
    assert not pydjc.rwa_rates("impulse", 1.0, 1.0)["suitable"]
    s2, g2 = pydjc.tcl_rates(2, "impulse", 1.0, 1.0, 3.0)
    assert g2 == pytest.approx(6.0, rel=1e-12)
    assert s2 == pytest.approx(0.0, abs=1e-12)


def test_exact_trajectory_invariants():
    traj = pydjc.exact_trajectory("ohmic", 1.0, 1.0, tmax=5.0, points=200)
    assert len(traj["t"]) == 200
    assert traj["rho11"][0] == pytest.approx(0.5, rel=1e-12)
    for p, r01 in zip(traj["rho11"], traj["rho01"]):
        assert -1e-12 <= p <= 1.0 + 1e-12
        assert abs(r01) ** 2 <= p * (1 - p) + 1e-12


def test_impulse_population_closed_form():
    traj = pydjc.exact_trajectory("impulse", 1.0, 1.0, tmax=6.0, points=600)
    for t, p in zip(traj["t"], traj["rho11"]):
        assert p == pytest.approx(0.5 * math.cos(t) ** 2, abs=1e-8)


def test_trace_norm_and_breakdown():
    assert pydjc.trace_norm_diff(0.0, 0j, 1.0, 0j) == 2.0
    times = pydjc.breakdown_times(1.0, 1.0, n_max=2)
    assert times[0] == pytest.approx(math.pi / 2, rel=1e-12)
    assert times[2] - times[1] == pytest.approx(math.pi, rel=1e-12)


def test_optimize_tau_small():
    out = pydjc.optimize_tau("triangular", 1.0, 0.5, horizon=50.0, n_grid=2001)
    assert out["d_star"] <= min(out["distance"])
    assert out["tau_star"] > 0

def test_errors_map_to_python():
    with pytest.raises(RuntimeError):
        pydjc.tcl2_asymptote_j3(1.0, 0.5)  # needs omega0 > omega_c
    with pytest.raises(RuntimeError):
        pydjc.si_ci(-1.0)
