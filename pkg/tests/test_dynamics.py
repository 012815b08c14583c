"""Tests for the rotating-frame dynamics module."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hillatlas import dynamics as dyn
from hillatlas._linalg import J6, symplectic_defect

from fdcheck import fd_gradient, fd_jacobian

RNG = np.random.default_rng(20260821)


def random_states(n, min_r=0.3, scale=1.5):
    """Random phase points with the position bounded away from the origin."""
    out = []
    while len(out) < n:
        s = RNG.uniform(-scale, scale, size=6)
        if np.linalg.norm(s[:3]) >= min_r:
            out.append(s)
    return out


finite_state = st.tuples(*[st.floats(-1.5, 1.5) for _ in range(6)]).map(
    lambda t: np.array(t)
)
safe_state = finite_state.filter(lambda s: np.linalg.norm(s[:3]) > 0.3)


# ---------------------------------------------------------------------------
# vector field vs Hamiltonian structure
# ---------------------------------------------------------------------------


def test_rhs_is_hamiltonian_vector_field():
    # oracle: f = J grad(H) with the gradient taken by finite differences
    for s in random_states(25):
        f = dyn.hill_rhs(s)
        g = fd_gradient(lambda q: dyn.hamiltonian(q), s)
        assert np.allclose(f, J6 @ g, atol=5e-8)


def test_grad_hamiltonian_matches_fd():
    for s in random_states(10):
        g = dyn.grad_hamiltonian(s)
        g_fd = fd_gradient(lambda q: dyn.hamiltonian(q), s)
        assert np.allclose(g, g_fd, atol=5e-8)


def test_jacobian_matches_fd_of_rhs():
    for s in random_states(10):
        a = dyn.hill_jacobian(s)
        a_fd = fd_jacobian(lambda q: dyn.hill_rhs(q), s)
        assert np.allclose(a, a_fd, atol=5e-7)


@settings(deadline=None, max_examples=60)
@given(safe_state)
def test_jacobian_infinitesimally_symplectic(s):
    # J A must be symmetric for a Hamiltonian vector field
    a = dyn.hill_jacobian(s)
    ja = J6 @ a
    assert np.allclose(ja, ja.T, atol=1e-12)


def test_variational_rhs_at_identity():
    s = np.array([0.8, 0.2, -0.1, 0.05, 0.7, 0.3])
    dphi = dyn.hill_variational_rhs(s, np.eye(6))
    assert np.allclose(dphi, dyn.hill_jacobian(s))


def test_gamma_conserved_to_first_order():
    # directional derivative of Gamma along the flow vanishes
    for s in random_states(10):
        f = dyn.hill_rhs(s)
        g = fd_gradient(lambda q: dyn.jacobi_constant(q), s)
        assert abs(g @ f) < 1e-6


# ---------------------------------------------------------------------------
# energy bookkeeping
# ---------------------------------------------------------------------------


def test_hand_energy_value():
    # at (x,y,z)=(1,0,0) at rest in the rotating frame (px=-y=0, py=x=1):
    # H = 1/2 - 1 - 1 - 1 = -5/2, Gamma = 5
    s = np.array([1.0, 0.0, 0.0, 0.0, 1.0, 0.0])
    assert dyn.hamiltonian(s) == pytest.approx(-2.5, abs=1e-14)
    assert dyn.jacobi_constant(s) == pytest.approx(5.0, abs=1e-14)


@settings(deadline=None, max_examples=60)
@given(safe_state)
def test_gamma_velocity_form(s):
    # Gamma = 3 x^2 - z^2 + 2/r - |v|^2 (velocity form of the same constant)
    x, y, z = s[:3]
    r = np.linalg.norm(s[:3])
    v = dyn.velocities(s)
    gamma_v = 3.0 * x * x - z * z + 2.0 / r - v @ v
    assert dyn.jacobi_constant(s) == pytest.approx(gamma_v, rel=1e-12, abs=1e-12)


@settings(deadline=None, max_examples=60)
@given(finite_state)
def test_velocity_roundtrip(s):
    v = dyn.velocities(s)
    p = dyn.momenta_from_velocities(s[:3], v)
    assert np.allclose(p, s[3:], atol=1e-15)
    s2 = dyn.state_from_velocities(s[0], s[1], s[2], v[0], v[1], v[2])
    assert np.allclose(s2, s, atol=1e-15)


def test_singular_guard():
    s_bad = np.array([1e-9, 0.0, 0.0, 0.0, 0.0, 0.0])
    with pytest.raises(dyn.SingularStateError):
        dyn.hill_rhs(s_bad)
    with pytest.raises(dyn.SingularStateError):
        dyn.hamiltonian(s_bad)
    with pytest.raises(dyn.SingularStateError):
        dyn.hill_jacobian(s_bad)


# ---------------------------------------------------------------------------
# equilibria and linearization
# ---------------------------------------------------------------------------


def test_equilibria_are_fixed_points():
    sp, sm, gamma = dyn.lagrange_points()
    assert np.max(np.abs(dyn.hill_rhs(sp))) < 1e-14
    assert np.max(np.abs(dyn.hill_rhs(sm))) < 1e-14
    # Gamma_L = 3^(4/3), computed independently here
    assert gamma == pytest.approx(3.0 ** (4.0 / 3.0), abs=1e-13)
    assert dyn.jacobi_constant(sp) == pytest.approx(gamma, abs=1e-12)
    assert dyn.jacobi_constant(sm) == pytest.approx(gamma, abs=1e-12)


def test_hill_linear_analysis_closed_forms():
    la = dyn.collinear_linear_analysis()
    # c = 1/x^3 + 1 with x = 3^(-1/3) gives exactly 4
    assert la.c == pytest.approx(4.0, abs=1e-12)
    # planar polynomial lambda^4 + 2 lambda^2 + (-27) = 0
    # => omega_p^2 = 2 sqrt(7) - 1, alpha1 = 2 sqrt(7) + 1
    s7 = np.sqrt(7.0)
    assert la.omega_p**2 == pytest.approx(2.0 * s7 - 1.0, abs=1e-12)
    assert la.alpha1 == pytest.approx(2.0 * s7 + 1.0, abs=1e-12)
    assert la.omega_v == pytest.approx(2.0, abs=1e-12)


def test_hill_linear_analysis_matches_jacobian_spectrum():
    # oracle: eigenvalues of the assembled 6x6 Jacobian at the equilibrium
    sp, _, _ = dyn.lagrange_points()
    eig = np.linalg.eigvals(dyn.hill_jacobian(sp))
    la = dyn.collinear_linear_analysis()
    got = np.sort_complex(np.round(eig, 10))
    want = np.sort_complex(np.round(np.array(la.eigenvalues), 10))
    assert np.allclose(got, want, atol=1e-9)


def test_seed_indices():
    la = dyn.collinear_linear_analysis()
    assert la.mu_cz_planar_lyap == 3
    assert la.mu_cz_vertical_lyap == 5


def test_scr3bp_equilibria_against_brentq():
    # oracle: root of the collinear effective-potential gradient
    # omega_x = x - (1-mu)(x+mu)/d1^3 - mu (x-1+mu)/d2^3 via scipy brentq
    from scipy.optimize import brentq

    def omega_x(x, mu):
        d1 = abs(x + mu)
        d2 = abs(x - 1.0 + mu)
        return x - (1.0 - mu) * (x + mu) / d1**3 - mu * (x - 1.0 + mu) / d2**3

    for mu in (1e-4, 0.01, 0.1, 0.3, 0.5):
        for point, lo, hi in (
            ("L1", -mu + 1e-6, 1.0 - mu - 1e-6),
            ("L2", 1.0 - mu + 1e-6, 3.0),
            ("L3", -3.0, -mu - 1e-6),
        ):
            la = dyn.collinear_linear_analysis("scr3bp", mu=mu, point=point)
            x_ref = brentq(omega_x, lo, hi, args=(mu,), xtol=1e-14)
            assert la.x_eq == pytest.approx(x_ref, abs=1e-12), (mu, point)


def test_scr3bp_equal_masses_inner_point():
    # with equal masses the inner collinear point sits at the midpoint
    la = dyn.collinear_linear_analysis("scr3bp", mu=0.5, point="L1")
    assert la.x_eq == pytest.approx(0.0, abs=1e-12)


def test_scr3bp_small_mass_limit_is_hill():
    # as mu -> 0 the gravity-gradient parameter at L1/L2 approaches the
    # Hill value c = 4 like (mu/3)^(1/3)
    for point in ("L1", "L2"):
        la = dyn.collinear_linear_analysis("scr3bp", mu=1e-9, point=point)
        assert la.c == pytest.approx(4.0, abs=0.01)


def test_frequency_ordering_sweep():
    # omega_v < omega_p < 2 omega_v at every collinear point of every mass
    # ratio: 64 log-spaced ratios x L1/L2/L3
    mus = np.geomspace(1e-6, 0.5, 64)
    for mu in mus:
        for point in ("L1", "L2", "L3"):
            la = dyn.collinear_linear_analysis("scr3bp", mu=float(mu), point=point)
            assert la.omega_v < la.omega_p < 2.0 * la.omega_v, (mu, point)


def test_scr3bp_rejects_bad_mass_ratio():
    with pytest.raises(ValueError):
        dyn.collinear_linear_analysis("scr3bp", mu=0.9)
    with pytest.raises(ValueError):
        dyn.collinear_linear_analysis("scr3bp")
    with pytest.raises(ValueError):
        dyn.collinear_linear_analysis("nope")


# ---------------------------------------------------------------------------
# symmetries
# ---------------------------------------------------------------------------


def test_symmetry_group_structure():
    syms = dyn.SYMMETRIES
    assert len(syms) == 8
    # every element is an involution
    for sym in syms.values():
        assert dyn.compose(sym, sym).tag == "id"
    # composition spot checks
    assert dyn.compose("rho1", "rho2").tag == "sigma"
    assert dyn.compose("rho3", "rho4").tag == "sigma"
    assert dyn.compose("rho1", "rho3").tag == "-sigma"
    assert dyn.compose("sigma", "-id").tag == "-sigma"
    # anti * anti = symplectic, anti * symplectic = anti
    for a in ("rho1", "rho2", "rho3", "rho4"):
        for b in ("rho1", "rho2", "rho3", "rho4"):
            assert dyn.compose(a, b).kind == "symplectic"
        assert dyn.compose(a, "sigma").kind == "antisymplectic"


def test_symmetry_matrices_symplectic_or_anti():
    for sym in dyn.SYMMETRIES.values():
        r = sym.matrix
        defect = r.T @ J6 @ r - (J6 if sym.kind == "symplectic" else -J6)
        assert np.max(np.abs(defect)) < 1e-15, sym.tag


@settings(deadline=None, max_examples=40)
@given(safe_state)
def test_symmetry_equivariance(s):
    # symplectic R: f(Rs) = R f(s); antisymplectic R: f(Rs) = -R f(s)
    f = dyn.hill_rhs(s)
    for sym in dyn.SYMMETRIES.values():
        sign = 1.0 if sym.kind == "symplectic" else -1.0
        assert np.allclose(dyn.hill_rhs(sym.apply(s)), sign * sym.apply(f), atol=1e-12), sym.tag


def test_fixed_sets():
    for tag in ("rho1", "rho2", "rho3", "rho4"):
        sym = dyn.SYMMETRIES[tag]
        assert sorted(sym.free + sym.zero) == list(range(6))
        s = np.zeros(6)
        for i, idx in enumerate(sym.free):
            s[idx] = 0.5 + 0.25 * i
        assert np.allclose(sym.apply(s), s), tag
        s[sym.zero[0]] = 0.3
        assert not np.allclose(sym.apply(s), s), tag


def test_section_aliases():
    assert dyn.get_symmetry("XOZ").tag == "rho1"
    assert dyn.get_symmetry("OX").tag == "rho2"
    assert dyn.get_symmetry("YOZ").tag == "rho3"
    assert dyn.get_symmetry("OY").tag == "rho4"


def test_apply_symmetry_time_sense_contract():
    s = np.array([1.0, 0.2, 0.1, 0.0, 1.0, 0.0])
    dyn.apply_symmetry("sigma", s, time_sense=+1)
    dyn.apply_symmetry("rho1", s, time_sense=-1)
    with pytest.raises(ValueError):
        dyn.apply_symmetry("sigma", s, time_sense=-1)
    with pytest.raises(ValueError):
        dyn.apply_symmetry("rho1", s, time_sense=+1)


def test_symmetry_matrices_are_plus_minus_one_diagonals():
    for sym in dyn.SYMMETRIES.values():
        m = sym.matrix
        assert np.allclose(m, np.diag(np.diag(m)))
        assert set(np.diag(m)).issubset({-1.0, 1.0})
        assert symplectic_defect(m) < 1e-15 or sym.kind == "antisymplectic"
