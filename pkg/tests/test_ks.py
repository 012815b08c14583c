"""Tests for the regularized chart: maps, Hamiltonian, variations, lifts."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hillatlas import dynamics as dyn
from hillatlas import ks

from fdcheck import fd_gradient, fd_jacobian

RNG = np.random.default_rng(31415)


def random_chart_states(n, scale=1.2, min_r=0.2):
    out = []
    while len(out) < n:
        w = RNG.uniform(-scale, scale, size=8)
        if w[:4] @ w[:4] > min_r:
            out.append(w)
    return out


u_vec = st.tuples(*[st.floats(-2, 2) for _ in range(4)]).map(np.array)
u_vec_nonzero = u_vec.filter(lambda u: u @ u > 0.1)


# ---------------------------------------------------------------------------
# the quadratic map and its algebra
# ---------------------------------------------------------------------------


@settings(deadline=None, max_examples=60)
@given(u_vec)
def test_ks_matrix_orthogonality(u):
    el = ks.ks_matrix(u)
    r = u @ u
    assert np.allclose(el.T @ el, r * np.eye(4), atol=1e-12)
    assert np.allclose(el @ el.T, r * np.eye(4), atol=1e-12)


@settings(deadline=None, max_examples=60)
@given(u_vec)
def test_position_norm_is_radius(u):
    # the chart maps spheres |u|^2 = r onto position spheres of radius r
    pos = ks.ks_position(u)
    assert np.linalg.norm(pos) == pytest.approx(u @ u, abs=1e-12)


def test_k_matrix_structure():
    for k in (ks.K1, ks.K2, ks.K3):
        assert np.allclose(k, k.T)
        assert np.allclose(k @ k, np.eye(4))
    assert np.allclose(ks.K4, -ks.K4.T)
    assert np.allclose(ks.K4 @ ks.K4, -np.eye(4))


def test_lift_roundtrip_both_branches():
    for x0 in (0.8, -0.8, 0.0):
        s = np.array([x0, 0.3, -0.2, 0.1, 0.9, -0.4])
        w = ks.ks_lift(s)
        assert np.allclose(ks.ks_state_to_phys(w), s, atol=1e-13)
        assert abs(ks.ks_bilinear(w[:4], w[4:])) < 1e-13
        w2 = ks.ks_lift(s, sign=-1.0)
        assert np.allclose(w2[:4], -w[:4])
        assert np.allclose(ks.ks_state_to_phys(w2), s, atol=1e-13)


def test_lift_rejects_collision_point():
    with pytest.raises(ValueError):
        ks.ks_lift(np.zeros(6))


def test_fiber_rotation_preserves_projection():
    s = np.array([0.5, -0.4, 0.3, 0.2, 0.6, -0.1])
    w = ks.ks_lift(s)
    for theta in (0.3, 1.0, 2.5, np.pi):
        w2 = ks.fiber_rotate(w, theta)
        assert np.allclose(ks.ks_state_to_phys(w2), s, atol=1e-12)
        assert abs(ks.ks_bilinear(w2[:4], w2[4:])) < 1e-12
    # antipodal representative is the half-turn
    assert np.allclose(ks.fiber_rotate(w, np.pi), -w, atol=1e-12)


# ---------------------------------------------------------------------------
# rescaled Hamiltonian and derivatives
# ---------------------------------------------------------------------------


def test_reg_hamiltonian_matches_physical():
    # Heff(w; h) = alpha r (H_phys(q(w)) + h) on lifted (m4 = 0) states
    for alpha in (1.0, 0.25):
        for s in (
            np.array([0.5, -0.4, 0.3, 0.2, 0.6, -0.1]),
            np.array([-0.7, 0.2, 0.1, -0.3, 0.4, 0.5]),
        ):
            w = ks.ks_lift(s, alpha=alpha)
            r = w[:4] @ w[:4]
            for h in (0.0, 0.9, -1.3):
                want = alpha * r * (dyn.hamiltonian(s) + h)
                assert ks.reg_hamiltonian(w, h, alpha) == pytest.approx(want, abs=1e-12)


def test_reg_energy_solves_zero_level():
    for w in random_chart_states(8):
        h = ks.reg_energy(w)
        assert abs(ks.reg_hamiltonian(w, h)) < 1e-12


def test_reg_energy_matches_physical_gamma():
    s = np.array([0.5, -0.4, 0.3, 0.2, 0.6, -0.1])
    for alpha in (1.0, 0.25):
        w = ks.ks_lift(s, alpha=alpha)
        assert 2.0 * ks.reg_energy(w, alpha) == pytest.approx(
            dyn.jacobi_constant(s), abs=1e-12
        )


def test_reg_grad_vs_fd():
    for w in random_chart_states(8):
        for alpha, h in ((1.0, 1.3), (0.25, -0.4)):
            g = ks.reg_grad(w, h, alpha)
            g_fd = fd_gradient(lambda q: ks.reg_hamiltonian(q, h, alpha), w)
            assert np.allclose(g, g_fd, atol=5e-8)


def test_reg_hessian_vs_fd():
    for w in random_chart_states(5):
        hess = ks.reg_hessian(w, 1.3)
        assert np.allclose(hess, hess.T, atol=1e-14)
        h_fd = fd_jacobian(lambda q: ks.reg_grad(q, 1.3), w)
        assert np.allclose(hess, h_fd, atol=5e-7)


def test_kernels_match_reference_implementation():
    for w in random_chart_states(5):
        for alpha, h in ((1.0, 1.3), (0.25, -0.4)):
            y9 = ks.pack_reg_state(w)
            out = np.empty(9)
            ks.reg_rhs_kernel(0.0, y9, np.array([alpha, h]), out)
            assert np.allclose(out[:8], ks.reg_rhs(w, h, alpha), atol=1e-13)
            assert out[8] == pytest.approx(alpha * (w[:4] @ w[:4]), abs=1e-13)
            hk = np.empty((8, 8))
            ks._reg_hessian_kernel(y9, alpha, h, hk)
            assert np.allclose(hk, ks.reg_hessian(w, h, alpha), atol=1e-12)


def test_lidov_eta_vs_fd():
    # eta is the derivative of the solved energy parameter
    for w in random_chart_states(5):
        eta = ks.lidov_eta(w)
        eta_fd = fd_gradient(lambda q: ks.reg_energy(q), w)
        assert np.allclose(eta, eta_fd, atol=5e-8)


def test_lidov_variational_rhs_vs_constrained_fd():
    # at tau = 0 (Y = I, zeta = 0) the variational derivative must equal the
    # Jacobian of w -> reg_rhs(w, reg_energy(w)): h re-solved per condition
    for w in random_chart_states(4):
        y81 = ks.pack_reg_var_state(w)
        p = ks.reg_var_params(w)
        out = np.empty(81)
        ks.reg_var_rhs_kernel(0.0, y81, p, out)
        dy = out[9:73].reshape(8, 8)
        g_fd = fd_jacobian(lambda q: ks.reg_rhs(q, ks.reg_energy(q)), w)
        assert np.allclose(dy, g_fd, atol=5e-7)
        # time sensitivity row: d(alpha r)/dw at Y = I
        dzeta = out[73:81]
        want = np.concatenate([2.0 * w[:4], np.zeros(4)])
        assert np.allclose(dzeta, want, atol=1e-13)


def test_phys_jacobian_vs_fd():
    for w in random_chart_states(5):
        jac = ks.phys_jacobian(w)
        jac_fd = fd_jacobian(lambda q: ks.ks_state_to_phys(q), w)
        assert np.allclose(jac, jac_fd, atol=5e-7)


def test_right_inverse_on_physical_shell():
    # the lift of the physical coordinate directions inverts the projection
    # derivative exactly on m4 = 0 states (and only there)
    for w in random_chart_states(5):
        wl = ks.ks_lift(ks.ks_state_to_phys(w))
        jac = ks.phys_jacobian(wl)
        assert np.allclose(jac @ ks.lift_jacobian(wl), np.eye(6), atol=1e-11)


def test_reg_to_phys_stm_identity_at_start():
    for w in random_chart_states(3):
        wl = ks.ks_lift(ks.ks_state_to_phys(w))
        x = ks.reg_to_phys_stm(wl, np.eye(8), np.zeros(8), wl)
        assert np.allclose(x, np.eye(6), atol=1e-11)


def test_pack_unpack_roundtrip():
    w = random_chart_states(1)[0]
    y = ks.pack_reg_var_state(w, t=0.7)
    w2, t, ymat, zeta = ks.unpack_reg_var_state(y)
    assert np.allclose(w2, w)
    assert t == 0.7
    assert np.allclose(ymat, np.eye(8))
    assert np.allclose(zeta, np.zeros(8))


# ---------------------------------------------------------------------------
# lifted symmetries
# ---------------------------------------------------------------------------


def test_lifted_symmetries_project_correctly():
    for w in random_chart_states(5):
        s = ks.ks_state_to_phys(w)
        for tag, rs in ks.REG_SYMMETRIES.items():
            sym = dyn.SYMMETRIES[rs.phys_tag]
            assert np.allclose(
                ks.ks_state_to_phys(rs.apply(w)), sym.apply(s), atol=1e-12
            ), tag


def test_lifted_symmetries_preserve_hamiltonian():
    for w in random_chart_states(5):
        for rs in ks.REG_SYMMETRIES.values():
            assert ks.reg_hamiltonian(rs.apply(w), 0.8) == pytest.approx(
                ks.reg_hamiltonian(w, 0.8), abs=1e-12
            )


def test_lifted_symmetries_are_involutions():
    for w in random_chart_states(3):
        for rs in ks.REG_SYMMETRIES.values():
            assert np.allclose(rs.apply(rs.apply(w)), w, atol=1e-14)


def test_section_bases():
    w = random_chart_states(1)[0]
    for tag, rs in ks.REG_SYMMETRIES.items():
        sb = rs.section_basis
        nb = rs.normal_basis
        # orthonormal, mutually orthogonal, spanning
        assert np.allclose(sb.T @ sb, np.eye(4), atol=1e-12)
        assert np.allclose(nb.T @ nb, np.eye(4), atol=1e-12)
        assert np.allclose(sb.T @ nb, np.zeros((4, 4)), atol=1e-12)
        # columns of the section basis are fixed points of the lift
        for k in range(4):
            assert np.allclose(rs.apply(sb[:, k]), sb[:, k], atol=1e-12), tag
        # residual vanishes exactly on section points and reproduces params
        xi = np.array([0.3, -0.7, 1.1, 0.2])
        wsec = rs.section_point(xi)
        assert np.allclose(rs.section_residual(wsec), 0.0, atol=1e-14)
        assert np.allclose(rs.section_params(wsec), xi, atol=1e-14)
    assert ks.get_reg_symmetry("XOZ").tag == "rho1"
    assert ks.get_reg_symmetry("YOZ").tag == "rho3"


def test_section_points_project_to_physical_fixed_sets():
    # a chart point on Fix(lift of rho) projects into Fix(rho)
    xi = np.array([0.9, 0.4, -0.3, 0.6])
    for tag in ("rho1", "rho2", "rho3", "rho4"):
        rs = ks.get_reg_symmetry(tag)
        w = rs.section_point(xi)
        if w[:4] @ w[:4] < 1e-6:
            continue
        s = ks.ks_state_to_phys(w)
        sym = dyn.SYMMETRIES[tag]
        assert np.allclose(s[list(sym.zero)], 0.0, atol=1e-12), tag


# ---------------------------------------------------------------------------
# vertical collision orbits
# ---------------------------------------------------------------------------


def test_collision_orbit_ic():
    # closed forms: apex (0,0,a) at rest, h = 1/a - a^2/2
    for a in (0.01, 0.2, 0.7, 1.5):
        w0, h = ks.collision_orbit_ic(a)
        assert h == pytest.approx(1.0 / a - 0.5 * a * a, abs=1e-14)
        # chart energy solved from the zero level agrees
        assert ks.reg_energy(w0) == pytest.approx(h, abs=1e-12)
        s = ks.ks_state_to_phys(w0)
        assert np.allclose(s[:3], [0.0, 0.0, a], atol=1e-14)
        assert np.allclose(s[3:], 0.0, atol=1e-14)
        # the apex lies on both vertical section planes
        assert np.max(np.abs(ks.get_reg_symmetry("rho1").section_residual(w0))) < 1e-14
        assert np.max(np.abs(ks.get_reg_symmetry("rho3").section_residual(w0))) < 1e-14


def test_collision_orbit_gamma_values():
    # Gamma = 2/a - a^2
    _, h = ks.collision_orbit_ic(0.2)
    assert 2.0 * h == pytest.approx(9.96, abs=1e-12)
    _, h = ks.collision_orbit_ic(0.01)
    assert h == pytest.approx(99.99995, abs=1e-8)


def test_collision_orbit_rejects_nonpositive_apex():
    with pytest.raises(ValueError):
        ks.collision_orbit_ic(0.0)
