"""Tests for the propagation driver, dense output, events, and monodromy
assembly helpers."""

import numpy as np
import pytest

from hillatlas import dynamics as dyn
from hillatlas import ks
from hillatlas import propagation as prop
from hillatlas._linalg import J6, symplectic_defect

S0 = np.array([0.3, 0.1, 0.05, 0.0, 0.4, 0.1])
S1 = np.array([0.35, 0.05, 0.12, -0.1, 0.55, 0.08])


# ---------------------------------------------------------------------------
# driver accuracy
# ---------------------------------------------------------------------------


def test_against_scipy_reference():
    # independent oracle: scipy's DOP853 at the same tolerances
    from scipy.integrate import solve_ivp

    def f(t, y):
        return dyn.hill_rhs(y)

    res = prop.integrate_hill(S0, 2.0)
    sol = solve_ivp(f, (0.0, 2.0), S0, method="DOP853", rtol=1e-12, atol=1e-12)
    assert res.status == prop.STATUS_OK
    assert np.max(np.abs(res.y - sol.y[:, -1])) < 1e-10


def test_backward_integration_inverts_forward():
    res = prop.integrate_hill(S0, 1.7)
    back = prop.integrate_hill(res.y, 0.0, t0=1.7)
    assert np.max(np.abs(back.y - S0)) < 1e-9


def test_gamma_conservation():
    g0 = dyn.jacobi_constant(S0)
    # over a few orbital periods the drift must stay below the tight bound
    res = prop.integrate_hill(S0, 5.0)
    assert abs(dyn.jacobi_constant(res.y) - g0) < 1e-9
    # a long arc with repeated close approaches accumulates slowly
    res = prop.integrate_hill(S0, 20.0)
    assert abs(dyn.jacobi_constant(res.y) - g0) < 5e-9


def test_reg_chart_stays_on_zero_level():
    w0 = ks.ks_lift(S1)
    h = ks.reg_energy(w0)
    res = prop.integrate_reg(w0, 5.0)
    assert abs(ks.reg_hamiltonian(res.y[:8], h)) < 1e-10
    assert abs(ks.ks_bilinear(res.y[:4], res.y[4:8])) < 1e-11


def test_charts_agree_on_common_arc():
    # integrate the same physical initial condition in both charts and
    # compare at equal physical time
    w0 = ks.ks_lift(S1)
    res_r = prop.integrate_reg(w0, 1.1)
    t_phys = res_r.y[8]
    res_p = prop.integrate_hill(S1, t_phys)
    assert np.max(np.abs(ks.ks_state_to_phys(res_r.y[:8]) - res_p.y)) < 1e-10


def test_dense_output_matches_direct():
    res = prop.integrate_hill(S0, 2.0, dense=True)
    for t_q in (0.1, 0.7654321, 1.234567, 1.999):
        direct = prop.integrate_hill(S0, t_q)
        assert np.max(np.abs(res.trajectory(t_q) - direct.y)) < 1e-11


def test_dense_output_vectorized_eval():
    res = prop.integrate_hill(S0, 1.0, dense=True)
    tq = np.array([0.2, 0.5, 0.9])
    out = res.trajectory(tq)
    assert out.shape == (3, 6)
    assert np.allclose(out[1], res.trajectory(0.5))


def test_status_max_steps():
    res = prop.integrate_hill(S0, 50.0, max_steps=10, check=False)
    assert res.status == prop.STATUS_MAX_STEPS
    with pytest.raises(prop.IntegrationError):
        prop.integrate_hill(S0, 50.0, max_steps=10)


def test_collision_crash_reports_underflow():
    # a physical-chart fall onto the singularity must stop with a step-size
    # underflow rather than produce garbage
    s_fall = np.array([0.0, 0.0, 0.2, 0.0, 0.0, 0.0])
    res = prop.integrate_hill(s_fall, 1.0, check=False)
    assert res.status == prop.STATUS_STEP_UNDERFLOW
    assert res.t < 1.0


def test_explicit_initial_step_accepted():
    res = prop.integrate_hill(S0, 1.0, h0=1e-3)
    ref = prop.integrate_hill(S0, 1.0)
    assert np.max(np.abs(res.y - ref.y)) < 1e-10


def test_max_step_honored():
    res = prop.integrate_hill(S0, 1.0, dense=True, max_step=0.01)
    assert np.max(np.diff(res.trajectory.ts)) <= 0.01 + 1e-12


# ---------------------------------------------------------------------------
# variational systems
# ---------------------------------------------------------------------------


def test_physical_stm_vs_fd():
    t_f = 1.3
    res = prop.integrate_hill_variational(S1, t_f)
    s_end, phi = prop.split_hill_var(res.y)
    eps = 1e-7
    for k in range(6):
        e = np.zeros(6)
        e[k] = eps
        yp = prop.integrate_hill(S1 + e, t_f).y
        ym = prop.integrate_hill(S1 - e, t_f).y
        assert np.max(np.abs((yp - ym) / (2 * eps) - phi[:, k])) < 1e-5


def test_physical_stm_symplectic():
    res = prop.integrate_hill_variational(S1, 2.0)
    _, phi = prop.split_hill_var(res.y)
    assert symplectic_defect(phi) < 1e-8


def test_reg_variations_vs_constrained_fd():
    # oracle: perturb the chart initial condition, re-solve the energy
    # parameter from the zero level, re-integrate
    w0 = ks.ks_lift(S1)
    tau_f = 1.1
    res = prop.integrate_reg_variational(w0, tau_f)
    w_end, t_end, ymat, zeta = ks.unpack_reg_var_state(res.y)
    eps = 1e-7
    for k in range(0, 8, 3):
        e = np.zeros(8)
        e[k] = eps
        rp = prop.integrate_reg(w0 + e, tau_f)
        rm = prop.integrate_reg(w0 - e, tau_f)
        assert np.max(np.abs((rp.y[:8] - rm.y[:8]) / (2 * eps) - ymat[:, k])) < 1e-6
        assert abs((rp.y[8] - rm.y[8]) / (2 * eps) - zeta[k]) < 1e-6


def test_reg_stm_converts_to_physical_stm():
    # the chart variations, converted through the projection/lift pair, must
    # reproduce the directly integrated physical transition matrix
    w0 = ks.ks_lift(S1)
    res = prop.integrate_reg_variational(w0, 1.1)
    w_end, t_end, ymat, zeta = ks.unpack_reg_var_state(res.y)
    res_p = prop.integrate_hill_variational(S1, t_end)
    s_end, phi = prop.split_hill_var(res_p.y)
    assert np.max(np.abs(s_end - ks.ks_state_to_phys(w_end))) < 1e-10
    x = ks.reg_to_phys_stm(w_end, ymat, zeta, w0)
    assert np.max(np.abs(x - phi)) < 1e-7
    assert symplectic_defect(x) < 1e-9


# ---------------------------------------------------------------------------
# events
# ---------------------------------------------------------------------------


def test_collision_orbit_period_event():
    # the vertical collision orbit returns to its apex with u -> -u, v -> 0;
    # the physical period approaches the two-body limit pi a^{3/2} / sqrt(2)
    # as the apex shrinks
    for a, tol in ((0.01, 2e-5), (0.2, 1e-2)):
        w0, h = ks.collision_orbit_ic(a)
        res = prop.integrate_reg(w0, 6.0, dense=True)
        hits = prop.find_crossings(
            res.trajectory, prop.apex_event(), direction=-1, t_min=1e-9, max_count=1
        )
        assert hits, a
        apex = hits[0]
        t_phys = apex.y[8]
        kepler = np.pi * a**1.5 / np.sqrt(2.0)
        assert t_phys == pytest.approx(kepler, rel=tol)
        assert np.max(np.abs(apex.y[:4] + w0[:4])) < 1e-9
        assert np.max(np.abs(apex.y[4:8])) < 1e-9


def test_collision_passage_is_regular():
    # midway the orbit passes through u = 0 (the collision) smoothly
    w0, _ = ks.collision_orbit_ic(0.2)
    res = prop.integrate_reg(w0, 6.0, dense=True)
    hits = prop.find_crossings(
        res.trajectory, prop.apex_event(), direction=+1, t_min=1e-9, max_count=1
    )
    assert hits
    col = hits[0]
    r_col = col.y[:4] @ col.y[:4]
    assert r_col < 1e-15
    # |v| = 2 sqrt(2) alpha at collision on the zero level
    assert np.linalg.norm(col.y[4:8]) == pytest.approx(2.0 * np.sqrt(2.0), abs=1e-9)


def test_plane_crossing_event():
    res = prop.integrate_hill(S0, 3.0, dense=True)
    hits = prop.find_crossings(res.trajectory, prop.coordinate_event(1), t_min=1e-9)
    for c in hits:
        assert abs(c.y[1]) < 1e-11
    # directions alternate for a transversal plane crossing
    signs = [c.direction for c in hits]
    assert all(s1 != s2 for s1, s2 in zip(signs, signs[1:]))


def test_event_direction_filter_and_window():
    res = prop.integrate_hill(S0, 3.0, dense=True)
    up = prop.find_crossings(res.trajectory, prop.coordinate_event(1), direction=+1, t_min=1e-9)
    down = prop.find_crossings(res.trajectory, prop.coordinate_event(1), direction=-1, t_min=1e-9)
    both = prop.find_crossings(res.trajectory, prop.coordinate_event(1), t_min=1e-9)
    assert len(up) + len(down) == len(both)
    assert all(c.direction == 1 for c in up)
    windowed = prop.find_crossings(
        res.trajectory, prop.coordinate_event(1), t_min=both[0].t + 1e-6
    )
    assert len(windowed) == len(both) - 1


def test_reg_time_event():
    w0 = ks.ks_lift(S1)
    res = prop.integrate_reg(w0, 2.0, dense=True)
    target = 0.6 * res.y[8]
    hits = prop.find_crossings(res.trajectory, prop.reg_time_event(target), max_count=1)
    assert hits
    assert hits[0].y[8] == pytest.approx(target, abs=1e-12)
    s_there = ks.ks_state_to_phys(hits[0].y[:8])
    direct = prop.integrate_hill(S1, target)
    assert np.max(np.abs(s_there - direct.y)) < 1e-9


# ---------------------------------------------------------------------------
# monodromy assembly algebra
# ---------------------------------------------------------------------------


def _random_symplectic(rng):
    # exp(J S) with S symmetric is symplectic; scipy expm is the oracle
    from scipy.linalg import expm

    s = rng.normal(size=(6, 6)) * 0.3
    s = 0.5 * (s + s.T)
    return expm(J6 @ s)


def test_symplectic_inverse():
    rng = np.random.default_rng(5)
    for _ in range(5):
        m = _random_symplectic(rng)
        assert np.max(np.abs(prop.symplectic_inverse(m) @ m - np.eye(6))) < 1e-10


def test_monodromy_composition_symplectic():
    rng = np.random.default_rng(6)
    n = _random_symplectic(rng)
    m_half = prop.monodromy_from_half(n, "rho1")
    assert symplectic_defect(m_half) < 1e-10
    p = _random_symplectic(rng)
    m_quarter = prop.monodromy_from_quarter(p, "rho2", "rho4")
    assert symplectic_defect(m_quarter) < 1e-10


def test_monodromy_rejects_symplectic_symmetry():
    with pytest.raises(ValueError):
        prop.monodromy_from_half(np.eye(6), "sigma")
    with pytest.raises(ValueError):
        prop.monodromy_from_quarter(np.eye(6), "sigma", "rho1")


def test_state_dimension_validation():
    with pytest.raises(ValueError):
        prop.integrate_hill(np.zeros(5), 1.0)
