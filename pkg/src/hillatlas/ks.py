"""Kustaanheimo-Stiefel regularized chart for the Hill problem.

The collision singularity at r = 0 is removed by the quadratic map

    x = u^T K1 u,   y = u^T K2 u,   z = u^T K3 u,        r = |u|^2,

from u in R^4 to position space, together with the momentum map
``p = L(u) v / (2 alpha |u|^2)`` and the Poincare time rescaling
``dt/dtau = alpha |u|^2``.  Here ``L(u)`` is the matrix whose rows are
``(K_i u)^T`` and alpha > 0 is a free dilation parameter (1 by default).

On the zero set of the rescaled Hamiltonian

    Heff = |v|^2/(8 alpha) + alpha h |u|^2 - alpha
           + (y m1 - x m2)/2 + alpha |u|^2 P(x, y, z),

with ``m_i = u^T K_i v``, ``P = -x^2 + y^2/2 + z^2/2`` and ``h = Gamma/2``,
the flow of Heff in the fictitious time tau projects to the physical flow at
energy Gamma.  The bilinear invariant ``m4 = u^T K4 v`` is conserved and must
vanish for states that represent physical ones.

Besides the chart itself this module provides:

- the lifted discrete symmetries acting as ``(u, v) -> (R u, +/- R v)``,
  with explicit bases of their fixed subspaces (sections for correctors),
- the extended variational system whose 8x8 matrix solution is the
  derivative of the regularized flow under the constraint that the energy
  parameter h is re-solved from Heff = 0 whenever the initial condition
  moves (the corrector works at fixed Heff = 0, not fixed h),
- the conversion of that constrained derivative into the 6x6 physical
  state-transition matrix between two points away from collision,
- the family of exactly vertical consecutive-collision orbits, which is
  available in closed form at the initial point.
"""

from dataclasses import dataclass

import numpy as np

from ._jit import maybe_njit
from ._linalg import J8
from .dynamics import SYMMETRIES, hill_rhs

ALPHA_DEFAULT = 1.0

K1 = np.array(
    [[1.0, 0, 0, 0], [0, -1.0, 0, 0], [0, 0, -1.0, 0], [0, 0, 0, 1.0]]
)
K2 = np.array(
    [[0, 1.0, 0, 0], [1.0, 0, 0, 0], [0, 0, 0, -1.0], [0, 0, -1.0, 0]]
)
K3 = np.array(
    [[0, 0, 1.0, 0], [0, 0, 0, 1.0], [1.0, 0, 0, 0], [0, 1.0, 0, 0]]
)
K4 = np.array(
    [[0, 0, 0, 1.0], [0, 0, -1.0, 0], [0, 1.0, 0, 0], [-1.0, 0, 0, 0]]
)


def ks_matrix(u):
    """The 4x4 matrix L(u) with rows (K_i u)^T; L^T L = L L^T = |u|^2 I."""
    u = np.asarray(u, dtype=float)
    return np.vstack([K1 @ u, K2 @ u, K3 @ u, K4 @ u])


def ks_position(u):
    """Physical position (x, y, z) of a chart point u."""
    u = np.asarray(u, dtype=float)
    return np.array([u @ K1 @ u, u @ K2 @ u, u @ K3 @ u])


def ks_radius(u):
    u = np.asarray(u, dtype=float)
    return float(u @ u)


def ks_bilinear(u, v):
    """The conserved bilinear m4 = u^T K4 v; zero on physical states."""
    return float(np.asarray(u, dtype=float) @ K4 @ np.asarray(v, dtype=float))


def ks_momenta(u, v, alpha=ALPHA_DEFAULT):
    """Physical momenta of a chart point (u, v) with r = |u|^2 > 0."""
    u = np.asarray(u, dtype=float)
    r = u @ u
    return (ks_matrix(u) @ np.asarray(v, dtype=float))[:3] / (2.0 * alpha * r)


def ks_state_to_phys(w, alpha=ALPHA_DEFAULT):
    """Project a chart state w = (u, v) to the physical state (q, p)."""
    w = np.asarray(w, dtype=float)
    u, v = w[:4], w[4:8]
    out = np.empty(6)
    out[:3] = ks_position(u)
    out[3:] = ks_momenta(u, v, alpha)
    return out


def ks_lift(s, alpha=ALPHA_DEFAULT, sign=1.0):
    """Lift a physical state to the chart; the result has m4 = 0 exactly.

    Of the circle of preimages of the position, the representative with
    u4 = 0 (for x >= 0) or u3 = 0 (for x < 0) is returned; ``sign`` selects
    between the two antipodal representatives of that convention.
    """
    s = np.asarray(s, dtype=float)
    x, y, z = s[:3]
    r = float(np.linalg.norm(s[:3]))
    if r == 0.0:
        raise ValueError("cannot lift the collision point itself")
    u = np.empty(4)
    if x >= 0.0:
        u[0] = np.sqrt(0.5 * (r + x))
        u[1] = 0.5 * y / u[0]
        u[2] = 0.5 * z / u[0]
        u[3] = 0.0
    else:
        u[1] = np.sqrt(0.5 * (r - x))
        u[0] = 0.5 * y / u[1]
        u[2] = 0.0
        u[3] = 0.5 * z / u[1]
    u *= sign
    p4 = np.array([s[3], s[4], s[5], 0.0])
    v = 2.0 * alpha * (ks_matrix(u).T @ p4)
    return np.concatenate([u, v])


def fiber_rotate(w, theta):
    """Rotate a chart state along the fiber; the projection is unchanged."""
    w = np.asarray(w, dtype=float)
    a = np.cos(theta) * np.eye(4) + np.sin(theta) * K4
    return np.concatenate([a @ w[:4], a @ w[4:8]])


# ---------------------------------------------------------------------------
# rescaled Hamiltonian, gradient, Hessian
# ---------------------------------------------------------------------------


def reg_hamiltonian(w, h, alpha=ALPHA_DEFAULT):
    w = np.asarray(w, dtype=float)
    u, v = w[:4], w[4:8]
    r = u @ u
    el = ks_matrix(u)
    x, y, z = (el @ u)[:3]
    m = el @ v
    p_tidal = -x * x + 0.5 * y * y + 0.5 * z * z
    return (
        v @ v / (8.0 * alpha)
        + alpha * h * r
        - alpha
        + 0.5 * (y * m[0] - x * m[1])
        + alpha * r * p_tidal
    )


def reg_energy(w, alpha=ALPHA_DEFAULT):
    """The energy parameter h = Gamma/2 that puts w on the zero level."""
    w = np.asarray(w, dtype=float)
    r = w[:4] @ w[:4]
    return -reg_hamiltonian(w, 0.0, alpha) / (alpha * r)


def reg_grad(w, h, alpha=ALPHA_DEFAULT):
    """Gradient of the rescaled Hamiltonian in (u, v)."""
    w = np.asarray(w, dtype=float)
    u, v = w[:4], w[4:8]
    r = u @ u
    k1u, k2u, k3u = K1 @ u, K2 @ u, K3 @ u
    x, y, z = u @ k1u, u @ k2u, u @ k3u
    m1, m2 = k1u @ v, k2u @ v
    p_tidal = -x * x + 0.5 * y * y + 0.5 * z * z
    g_tidal = -4.0 * x * k1u + 2.0 * y * k2u + 2.0 * z * k3u
    gu = (
        2.0 * alpha * h * u
        + m1 * k2u
        + 0.5 * y * (K1 @ v)
        - m2 * k1u
        - 0.5 * x * (K2 @ v)
        + 2.0 * alpha * p_tidal * u
        + alpha * r * g_tidal
    )
    gv = v / (4.0 * alpha) + 0.5 * (y * k1u - x * k2u)
    return np.concatenate([gu, gv])


def reg_rhs(w, h, alpha=ALPHA_DEFAULT):
    """tau-derivative of (u, v): the Hamiltonian vector field J grad."""
    return J8 @ reg_grad(w, h, alpha)


def reg_hessian(w, h, alpha=ALPHA_DEFAULT):
    """8x8 Hessian of the rescaled Hamiltonian in (u, v)."""
    w = np.asarray(w, dtype=float)
    u, v = w[:4], w[4:8]
    r = u @ u
    k1u, k2u, k3u = K1 @ u, K2 @ u, K3 @ u
    k1v, k2v = K1 @ v, K2 @ v
    x, y, z = u @ k1u, u @ k2u, u @ k3u
    m1, m2 = k1u @ v, k2u @ v
    p_tidal = -x * x + 0.5 * y * y + 0.5 * z * z
    g_tidal = -4.0 * x * k1u + 2.0 * y * k2u + 2.0 * z * k3u

    h_uu = (
        2.0 * alpha * h * np.eye(4)
        + m1 * K2
        - m2 * K1
        + np.outer(k2u, k1v)
        + np.outer(k1v, k2u)
        - np.outer(k1u, k2v)
        - np.outer(k2v, k1u)
        + 2.0 * alpha * p_tidal * np.eye(4)
        + 2.0 * alpha * (np.outer(u, g_tidal) + np.outer(g_tidal, u))
        + alpha
        * r
        * (
            -8.0 * np.outer(k1u, k1u)
            - 4.0 * x * K1
            + 4.0 * np.outer(k2u, k2u)
            + 2.0 * y * K2
            + 4.0 * np.outer(k3u, k3u)
            + 2.0 * z * K3
        )
    )
    h_uv = np.outer(k2u, k1u) - np.outer(k1u, k2u) + 0.5 * (y * K1 - x * K2)
    h_vv = np.eye(4) / (4.0 * alpha)
    hess = np.empty((8, 8))
    hess[:4, :4] = h_uu
    hess[:4, 4:] = h_uv
    hess[4:, :4] = h_uv.T
    hess[4:, 4:] = h_vv
    return hess


def lidov_eta(w0, alpha=ALPHA_DEFAULT):
    """Sensitivity of the solved energy parameter: eta = dh/dw0.

    With h re-solved from Heff(w0; h) = 0, dh/dw0 = -grad Heff / (alpha r0),
    evaluated with the full gradient (including the h-term).  The energy of
    the represented physical state is Gamma = 2 h, so dGamma/dw0 = 2 eta.
    """
    w0 = np.asarray(w0, dtype=float)
    h = reg_energy(w0, alpha)
    r0 = w0[:4] @ w0[:4]
    return -reg_grad(w0, h, alpha) / (alpha * r0)


# ---------------------------------------------------------------------------
# integration kernels (shared signature rhs(t, y, p, out))
# ---------------------------------------------------------------------------
# plain chart state: y = [u(4), v(4), t_phys], p = [alpha, h]
# with variations:   y = [u(4), v(4), t_phys, Y(64, row-major), zeta(8)],
#                    p = [alpha, h, eta(8)]
# Y solves  dY/dtau = J Hess Y + (0, -2 alpha u) eta^T,  Y(0) = I, which is
# the derivative of the flow with h re-solved from the moving initial
# condition; zeta accumulates the matching derivative of physical time.


@maybe_njit(cache=True)
def _reg_core(y, alpha, h, dy):
    u0, u1, u2, u3 = y[0], y[1], y[2], y[3]
    v0, v1, v2, v3 = y[4], y[5], y[6], y[7]
    r = u0 * u0 + u1 * u1 + u2 * u2 + u3 * u3
    # K_i u and K_i v products, written out
    k1u0, k1u1, k1u2, k1u3 = u0, -u1, -u2, u3
    k2u0, k2u1, k2u2, k2u3 = u1, u0, -u3, -u2
    k3u0, k3u1, k3u2, k3u3 = u2, u3, u0, u1
    k1v0, k1v1, k1v2, k1v3 = v0, -v1, -v2, v3
    k2v0, k2v1, k2v2, k2v3 = v1, v0, -v3, -v2
    x = u0 * k1u0 + u1 * k1u1 + u2 * k1u2 + u3 * k1u3
    yy = u0 * k2u0 + u1 * k2u1 + u2 * k2u2 + u3 * k2u3
    z = u0 * k3u0 + u1 * k3u1 + u2 * k3u2 + u3 * k3u3
    m1 = k1u0 * v0 + k1u1 * v1 + k1u2 * v2 + k1u3 * v3
    m2 = k2u0 * v0 + k2u1 * v1 + k2u2 * v2 + k2u3 * v3
    p_tidal = -x * x + 0.5 * yy * yy + 0.5 * z * z
    g0 = -4.0 * x * k1u0 + 2.0 * yy * k2u0 + 2.0 * z * k3u0
    g1 = -4.0 * x * k1u1 + 2.0 * yy * k2u1 + 2.0 * z * k3u1
    g2 = -4.0 * x * k1u2 + 2.0 * yy * k2u2 + 2.0 * z * k3u2
    g3 = -4.0 * x * k1u3 + 2.0 * yy * k2u3 + 2.0 * z * k3u3
    inv4a = 1.0 / (4.0 * alpha)
    # du/dtau = dHeff/dv
    dy[0] = v0 * inv4a + 0.5 * (yy * k1u0 - x * k2u0)
    dy[1] = v1 * inv4a + 0.5 * (yy * k1u1 - x * k2u1)
    dy[2] = v2 * inv4a + 0.5 * (yy * k1u2 - x * k2u2)
    dy[3] = v3 * inv4a + 0.5 * (yy * k1u3 - x * k2u3)
    # dv/dtau = -dHeff/du
    c = 2.0 * alpha * (h + p_tidal)
    ar = alpha * r
    dy[4] = -(c * u0 + m1 * k2u0 + 0.5 * yy * k1v0 - m2 * k1u0 - 0.5 * x * k2v0 + ar * g0)
    dy[5] = -(c * u1 + m1 * k2u1 + 0.5 * yy * k1v1 - m2 * k1u1 - 0.5 * x * k2v1 + ar * g1)
    dy[6] = -(c * u2 + m1 * k2u2 + 0.5 * yy * k1v2 - m2 * k1u2 - 0.5 * x * k2v2 + ar * g2)
    dy[7] = -(c * u3 + m1 * k2u3 + 0.5 * yy * k1v3 - m2 * k1u3 - 0.5 * x * k2v3 + ar * g3)
    # physical time
    dy[8] = ar
    return r


@maybe_njit(cache=True)
def reg_rhs_kernel(t, y, p, out):
    _reg_core(y, p[0], p[1], out)


@maybe_njit(cache=True)
def _reg_hessian_kernel(y, alpha, h, hess):
    u = y[:4]
    v = y[4:8]
    k1 = np.empty(4)
    k2 = np.empty(4)
    k3 = np.empty(4)
    k1[0], k1[1], k1[2], k1[3] = u[0], -u[1], -u[2], u[3]
    k2[0], k2[1], k2[2], k2[3] = u[1], u[0], -u[3], -u[2]
    k3[0], k3[1], k3[2], k3[3] = u[2], u[3], u[0], u[1]
    k1v = np.empty(4)
    k2v = np.empty(4)
    k1v[0], k1v[1], k1v[2], k1v[3] = v[0], -v[1], -v[2], v[3]
    k2v[0], k2v[1], k2v[2], k2v[3] = v[1], v[0], -v[3], -v[2]
    r = u[0] * u[0] + u[1] * u[1] + u[2] * u[2] + u[3] * u[3]
    x = u @ k1
    yy = u @ k2
    z = u @ k3
    m1 = k1 @ v
    m2 = k2 @ v
    p_tidal = -x * x + 0.5 * yy * yy + 0.5 * z * z
    g = np.empty(4)
    for i in range(4):
        g[i] = -4.0 * x * k1[i] + 2.0 * yy * k2[i] + 2.0 * z * k3[i]
    # constant matrices K1, K2, K3 entered elementwise below
    ar = alpha * r
    diag = 2.0 * alpha * (h + p_tidal)
    for i in range(4):
        for j in range(4):
            val = (
                k2[i] * k1v[j]
                + k1v[i] * k2[j]
                - k1[i] * k2v[j]
                - k2v[i] * k1[j]
                + 2.0 * alpha * (u[i] * g[j] + g[i] * u[j])
                + ar * (-8.0 * k1[i] * k1[j] + 4.0 * k2[i] * k2[j] + 4.0 * k3[i] * k3[j])
            )
            hess[i, j] = val
    # add m1*K2 - m2*K1 and ar*(-4x K1 + 2y K2 + 2z K3) elementwise
    # K1 = diag(1,-1,-1,1)
    hess[0, 0] += -m2 * 1.0 + ar * (-4.0 * x)
    hess[1, 1] += -m2 * -1.0 + ar * (4.0 * x)
    hess[2, 2] += -m2 * -1.0 + ar * (4.0 * x)
    hess[3, 3] += -m2 * 1.0 + ar * (-4.0 * x)
    # K2: (0,1),(1,0) = 1; (2,3),(3,2) = -1
    hess[0, 1] += m1 + ar * 2.0 * yy
    hess[1, 0] += m1 + ar * 2.0 * yy
    hess[2, 3] += -m1 - ar * 2.0 * yy
    hess[3, 2] += -m1 - ar * 2.0 * yy
    # K3: (0,2),(2,0),(1,3),(3,1) = 1
    hess[0, 2] += ar * 2.0 * z
    hess[2, 0] += ar * 2.0 * z
    hess[1, 3] += ar * 2.0 * z
    hess[3, 1] += ar * 2.0 * z
    for i in range(4):
        hess[i, i] += diag
    # mixed block H_uv = outer(k2,k1) - outer(k1,k2) + (y K1 - x K2)/2
    for i in range(4):
        for j in range(4):
            huv = k2[i] * k1[j] - k1[i] * k2[j]
            hess[i, 4 + j] = huv
            hess[4 + j, i] = huv
    hess[0, 4] += 0.5 * yy
    hess[1, 5] += -0.5 * yy
    hess[2, 6] += -0.5 * yy
    hess[3, 7] += 0.5 * yy
    hess[0, 5] += -0.5 * x
    hess[1, 4] += -0.5 * x
    hess[2, 7] += 0.5 * x
    hess[3, 6] += 0.5 * x
    for i in range(4):
        for j in range(4):
            hess[4 + i, j] = hess[j, 4 + i]
            hess[4 + i, 4 + j] = 0.0
        hess[4 + i, 4 + i] = 1.0 / (4.0 * alpha)


@maybe_njit(cache=True)
def reg_var_rhs_kernel(t, y, p, out):
    alpha = p[0]
    h = p[1]
    _reg_core(y, alpha, h, out)
    hess = np.empty((8, 8))
    _reg_hessian_kernel(y, alpha, h, hess)
    # F = J8 Hess: top block = lower rows of Hess, bottom = -upper rows
    f = np.empty((8, 8))
    for j in range(8):
        for i in range(4):
            f[i, j] = hess[4 + i, j]
            f[4 + i, j] = -hess[i, j]
    ym = y[9:73].reshape(8, 8)
    dym = np.dot(f, ym)
    # rank-one forcing from the re-solved energy parameter
    for i in range(4):
        b = -2.0 * alpha * y[i]
        for j in range(8):
            dym[4 + i, j] += b * p[2 + j]
    for i in range(8):
        for j in range(8):
            out[9 + 8 * i + j] = dym[i, j]
    # zeta' = d(alpha r)/dw . Y = 2 alpha u . Y_rows(u)
    for j in range(8):
        acc = 0.0
        for i in range(4):
            acc += 2.0 * alpha * y[i] * ym[i, j]
        out[73 + j] = acc


N_REG = 9
N_REG_VAR = 81


def pack_reg_state(w, t=0.0):
    """Pack (u, v) and physical time into the 9-dim integration state."""
    w = np.asarray(w, dtype=float)
    return np.concatenate([w[:8], [t]])


def pack_reg_var_state(w, t=0.0):
    """Pack state, identity variations and zero time-sensitivity (81-dim)."""
    w = np.asarray(w, dtype=float)
    return np.concatenate([w[:8], [t], np.eye(8).ravel(), np.zeros(8)])


def unpack_reg_var_state(y):
    """Split an 81-dim variational state into (w, t, Y, zeta)."""
    y = np.asarray(y, dtype=float)
    return y[:8], float(y[8]), y[9:73].reshape(8, 8).copy(), y[73:81].copy()


def reg_var_params(w0, alpha=ALPHA_DEFAULT):
    """Parameter vector [alpha, h, eta] for the variational kernel."""
    w0 = np.asarray(w0, dtype=float)
    h = reg_energy(w0, alpha)
    return np.concatenate([[alpha, h], lidov_eta(w0, alpha)])


# ---------------------------------------------------------------------------
# chart-derivative conversion
# ---------------------------------------------------------------------------


def phys_jacobian(w, alpha=ALPHA_DEFAULT):
    """Derivative (6x8) of the projection (u, v) -> (q, p) at w."""
    w = np.asarray(w, dtype=float)
    u, v = w[:4], w[4:8]
    r = u @ u
    el3 = ks_matrix(u)[:3]
    jac = np.zeros((6, 8))
    jac[:3, :4] = 2.0 * el3
    jac[3:, 4:] = el3 / (2.0 * alpha * r)
    for i, k in enumerate((K1, K2, K3)):
        kv = k @ v
        m_i = u @ kv
        jac[3 + i, :4] = kv / (2.0 * alpha * r) - m_i * u / (alpha * r * r)
    return jac


def lift_jacobian(w0, alpha=ALPHA_DEFAULT):
    """A right inverse (8x6) of :func:`phys_jacobian` at w0.

    Columns are tangent lifts of the physical coordinate directions.  The
    identity phys_jacobian(w0) @ lift_jacobian(w0) = I holds on the physical
    shell m4 = 0 (the momentum columns reconstruct v from the three physical
    momenta, dropping the fourth, m4-carrying component of L v).
    """
    w0 = np.asarray(w0, dtype=float)
    u = w0[:4]
    r = u @ u
    el3t = ks_matrix(u)[:3].T
    p_phys = ks_momenta(u, w0[4:8], alpha)
    kp = p_phys[0] * K1 + p_phys[1] * K2 + p_phys[2] * K3
    b = np.zeros((8, 6))
    b[:4, :3] = el3t / (2.0 * r)
    b[4:, :3] = alpha * (kp @ el3t) / r
    b[4:, 3:] = 2.0 * alpha * el3t
    return b


def reg_to_phys_stm(w_end, ymat, zeta, w0, alpha=ALPHA_DEFAULT):
    """Physical state-transition matrix from the chart variational data.

    ``ymat``/``zeta`` are the 8x8 and 8-dim solutions of the extended
    variational system over an arc from w0 to w_end.  Both endpoints must be
    away from collision.  The result is the 6x6 derivative of the physical
    arrival state at fixed physical arrival time with respect to the
    physical departure state.
    """
    q_end = ks_state_to_phys(w_end, alpha)
    eps = phys_jacobian(w_end, alpha) @ ymat - np.outer(hill_rhs(q_end), zeta)
    return eps @ lift_jacobian(w0, alpha)


# ---------------------------------------------------------------------------
# lifted discrete symmetries
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RegSymmetry:
    """A discrete symmetry of the chart flow, acting as (u,v) -> (Ru, sRv).

    ``phys_tag`` names the projected physical symmetry.  For the
    time-reversal lifts (s = -1) the fixed subspace is four-dimensional and
    spanned by the columns of ``section_basis``; ``normal_basis`` spans its
    orthogonal complement, so ``normal_basis.T @ w`` collects the four
    conditions for w to lie on the section.
    """

    tag: str
    phys_tag: str
    r_matrix: tuple
    v_sign: int
    u_free: tuple
    v_free: tuple

    @property
    def rmat(self):
        return np.array(self.r_matrix, dtype=float)

    def apply(self, w):
        w = np.asarray(w, dtype=float)
        rm = self.rmat
        return np.concatenate([rm @ w[:4], self.v_sign * (rm @ w[4:8])])

    @property
    def section_basis(self):
        cols = []
        for c in self.u_free:
            col = np.zeros(8)
            col[:4] = c
            cols.append(col)
        for c in self.v_free:
            col = np.zeros(8)
            col[4:] = c
            cols.append(col)
        return np.column_stack(cols)

    @property
    def normal_basis(self):
        rm = self.rmat
        cols = []
        # u-complement: eigenvectors of R at -1; v-complement: at +v_sign*-1
        for sign, sl in ((-1.0, slice(0, 4)), (float(-self.v_sign), slice(4, 8))):
            vals, vecs = np.linalg.eigh(rm)
            for k in range(4):
                if abs(vals[k] - sign) < 1e-9:
                    col = np.zeros(8)
                    col[sl] = vecs[:, k]
                    cols.append(col)
        return np.column_stack(cols)

    def section_point(self, xi):
        """Chart state of section parameters xi (4,)."""
        return self.section_basis @ np.asarray(xi, dtype=float)

    def section_params(self, w):
        """Project a chart state onto the section parameters."""
        return self.section_basis.T @ np.asarray(w, dtype=float)

    def section_residual(self, w):
        """Four conditions vanishing exactly on the fixed subspace."""
        return self.normal_basis.T @ np.asarray(w, dtype=float)


_S2 = 1.0 / np.sqrt(2.0)

REG_SYMMETRIES = {
    # z-reflection; its fixed subspace is the planar (u3=u4=v3=v4=0) chart
    "sigma": RegSymmetry(
        "sigma",
        "sigma",
        ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, -1, 0), (0, 0, 0, -1)),
        +1,
        ((1, 0, 0, 0), (0, 1, 0, 0)),
        ((1, 0, 0, 0), (0, 1, 0, 0)),
    ),
    "rho1": RegSymmetry(
        "rho1",
        "rho1",
        ((1, 0, 0, 0), (0, -1, 0, 0), (0, 0, 1, 0), (0, 0, 0, -1)),
        -1,
        ((1, 0, 0, 0), (0, 0, 1, 0)),
        ((0, 1, 0, 0), (0, 0, 0, 1)),
    ),
    "rho2": RegSymmetry(
        "rho2",
        "rho2",
        ((1, 0, 0, 0), (0, -1, 0, 0), (0, 0, -1, 0), (0, 0, 0, 1)),
        -1,
        ((1, 0, 0, 0), (0, 0, 0, 1)),
        ((0, 1, 0, 0), (0, 0, 1, 0)),
    ),
    "rho3": RegSymmetry(
        "rho3",
        "rho3",
        ((0, 0, 1, 0), (0, 0, 0, -1), (1, 0, 0, 0), (0, -1, 0, 0)),
        -1,
        ((_S2, 0, _S2, 0), (0, _S2, 0, -_S2)),
        ((_S2, 0, -_S2, 0), (0, _S2, 0, _S2)),
    ),
    "rho4": RegSymmetry(
        "rho4",
        "rho4",
        ((0, 1, 0, 0), (1, 0, 0, 0), (0, 0, 0, -1), (0, 0, -1, 0)),
        -1,
        ((_S2, _S2, 0, 0), (0, 0, _S2, -_S2)),
        ((_S2, -_S2, 0, 0), (0, 0, _S2, _S2)),
    ),
}


def get_reg_symmetry(tag):
    """Look up a lifted symmetry by tag or by fixed-set alias."""
    if isinstance(tag, RegSymmetry):
        return tag
    aliases = {"XOZ": "rho1", "OX": "rho2", "YOZ": "rho3", "OY": "rho4"}
    return REG_SYMMETRIES[aliases.get(tag, tag)]


# ---------------------------------------------------------------------------
# vertical consecutive-collision orbits
# ---------------------------------------------------------------------------


def collision_orbit_ic(a, alpha=ALPHA_DEFAULT):
    """Initial chart state and energy of the vertical collision orbit.

    The orbit starts at rest at the apex (0, 0, a), falls into the
    singularity along the z-axis and returns.  In the chart the initial
    condition is exact: u = (sqrt(a/2), 0, sqrt(a/2), 0), v = 0, and the
    zero-level condition gives h = 1/a - a^2/2 (so Gamma = 2/a - a^2).
    Returns ``(w0, h)``.
    """
    if a <= 0:
        raise ValueError("apex height must be positive")
    ua = np.sqrt(0.5 * a)
    w0 = np.array([ua, 0.0, ua, 0.0, 0.0, 0.0, 0.0, 0.0])
    h = 1.0 / a - 0.5 * a * a
    return w0, h
