"""Rotating-frame dynamics of the spatial Hill lunar problem.

State convention
----------------
A physical phase point is a 6-vector ``s = (x, y, z, px, py, pz)`` in Hill
units.  Momenta are canonical (``px = vx - y``, ``py = vy + x``, ``pz = vz``);
use :func:`velocities` / :func:`momenta_from_velocities` to convert for table
I/O, which traditionally lists velocities.

The Hamiltonian is

    H = (px^2 + py^2 + pz^2)/2 - 1/r + px*y - py*x - x^2 + (y^2 + z^2)/2

with r = |(x, y, z)|, and the energy is reported as the Jacobi-type constant
``Gamma = -2 H``.

This module also provides the discrete symmetries of the flow, the two
collinear equilibria, and the linearization at collinear equilibria (for the
Hill problem and for a general mass-ratio restricted problem), which seeds the
index bookkeeping of the Lyapunov families.
"""

from dataclasses import dataclass

import numpy as np

from ._jit import maybe_njit
from ._linalg import J6

# x-coordinate of the equilibria (+/-) and their energy
LAGRANGE_X = 3.0 ** (-1.0 / 3.0)
GAMMA_L = 3.0 * 3.0 ** (1.0 / 3.0)

# below this radius the physical chart refuses to evaluate; switch to the
# regularized chart instead
R_FLOOR = 1e-8


class SingularStateError(ValueError):
    """Raised when a physical-chart evaluation is requested too close to r=0."""


# ----------------------------------------------------------------------------
# vector field kernels (numba-compiled unless HILL_ATLAS_NUMBA=0)
# ----------------------------------------------------------------------------
# All integrable right-hand sides share the signature rhs(t, y, p, out) so the
# propagation driver can be generic.  `p` carries chart parameters (unused
# here).


@maybe_njit(cache=True)
def hill_rhs_kernel(t, y, p, out):
    x = y[0]
    yy = y[1]
    z = y[2]
    px = y[3]
    py = y[4]
    pz = y[5]
    r2 = x * x + yy * yy + z * z
    r = np.sqrt(r2)
    r3 = r2 * r
    out[0] = px + yy
    out[1] = py - x
    out[2] = pz
    out[3] = py + 2.0 * x - x / r3
    out[4] = -px - yy - yy / r3
    out[5] = -z - z / r3


@maybe_njit(cache=True)
def hill_jacobian_kernel(y, a):
    """Jacobian A(s) of the Hill vector field, written into ``a`` (6x6)."""
    x = y[0]
    yy = y[1]
    z = y[2]
    r2 = x * x + yy * yy + z * z
    r = np.sqrt(r2)
    r3 = r2 * r
    r5 = r3 * r2
    inv_r3 = 1.0 / r3
    a[:, :] = 0.0
    a[0, 1] = 1.0
    a[0, 3] = 1.0
    a[1, 0] = -1.0
    a[1, 4] = 1.0
    a[2, 5] = 1.0
    # d(x_i / r^3)/dx_j = delta_ij / r^3 - 3 x_i x_j / r^5
    b11 = inv_r3 - 3.0 * x * x / r5
    b12 = -3.0 * x * yy / r5
    b13 = -3.0 * x * z / r5
    b22 = inv_r3 - 3.0 * yy * yy / r5
    b23 = -3.0 * yy * z / r5
    b33 = inv_r3 - 3.0 * z * z / r5
    a[3, 0] = 2.0 - b11
    a[3, 1] = -b12
    a[3, 2] = -b13
    a[3, 4] = 1.0
    a[4, 0] = -b12
    a[4, 1] = -1.0 - b22
    a[4, 2] = -b23
    a[4, 3] = -1.0
    a[5, 0] = -b13
    a[5, 1] = -b23
    a[5, 2] = -1.0 - b33


@maybe_njit(cache=True)
def hill_var_rhs_kernel(t, y, p, out):
    """State + 6x6 fundamental matrix, packed as y = [s(6), Phi(36 row-major)]."""
    hill_rhs_kernel(t, y[:6], p, out[:6])
    a = np.empty((6, 6))
    hill_jacobian_kernel(y[:6], a)
    phi = y[6:42].reshape(6, 6)
    dphi = out[6:42].reshape(6, 6)
    dphi[:, :] = np.dot(a, phi)


def _check_r(s, r_floor):
    r = float(np.sqrt(s[0] ** 2 + s[1] ** 2 + s[2] ** 2))
    if not np.isfinite(r) or r < r_floor:
        raise SingularStateError(
            f"physical chart evaluated at r={r:.3e} < floor {r_floor:.1e}; "
            "use the regularized chart for near-collision states"
        )
    return r


def hill_rhs(s, r_floor=R_FLOOR):
    """Time derivative of a physical phase point under the Hill flow."""
    s = np.asarray(s, dtype=float)
    _check_r(s, r_floor)
    out = np.empty(6)
    hill_rhs_kernel(0.0, s, np.empty(0), out)
    return out


def hill_jacobian(s, r_floor=R_FLOOR):
    """Jacobian matrix A(s) of :func:`hill_rhs`; J A is symmetric."""
    s = np.asarray(s, dtype=float)
    _check_r(s, r_floor)
    a = np.empty((6, 6))
    hill_jacobian_kernel(s, a)
    return a


def hill_variational_rhs(s, phi, r_floor=R_FLOOR):
    """Derivative of the fundamental matrix: dPhi/dt = A(s) Phi."""
    phi = np.asarray(phi, dtype=float)
    return hill_jacobian(s, r_floor) @ phi


def hamiltonian(s, r_floor=R_FLOOR):
    s = np.asarray(s, dtype=float)
    r = _check_r(s, r_floor)
    x, y, z, px, py, pz = s
    return (
        0.5 * (px * px + py * py + pz * pz)
        - 1.0 / r
        + px * y
        - py * x
        - x * x
        + 0.5 * (y * y + z * z)
    )


def jacobi_constant(s, r_floor=R_FLOOR):
    """Gamma = -2 H, conserved along the flow."""
    return -2.0 * hamiltonian(s, r_floor)


def grad_hamiltonian(s, r_floor=R_FLOOR):
    """Gradient of H; the vector field is J grad(H)."""
    return -J6 @ hill_rhs(s, r_floor)


def velocities(s):
    """Rotating-frame velocities (vx, vy, vz) of a phase point."""
    s = np.asarray(s, dtype=float)
    return np.array([s[3] + s[1], s[4] - s[0], s[5]])


def momenta_from_velocities(pos, vel):
    """Canonical momenta for given position and rotating-frame velocity."""
    x, y, z = pos
    vx, vy, vz = vel
    return np.array([vx - y, vy + x, vz])


def state_from_velocities(x, y, z, vx, vy, vz):
    """Assemble a phase point from position and rotating-frame velocities."""
    return np.array([x, y, z, vx - y, vy + x, vz])


# ----------------------------------------------------------------------------
# discrete symmetries
# ----------------------------------------------------------------------------


@dataclass(frozen=True)
class Symmetry:
    """A linear symmetry of the Hill flow.

    ``kind == "symplectic"`` maps trajectories to trajectories; ``kind ==
    "antisymplectic"`` maps trajectories to time-reversed trajectories.  For
    the time-reversal symmetries the fixed-point set is spanned by the
    ``free`` coordinates (the ``zero`` coordinates vanish on it); periodic
    orbits hitting such a set twice are symmetric orbits.
    """

    tag: str
    kind: str
    signs: tuple
    free: tuple = ()
    zero: tuple = ()

    @property
    def matrix(self):
        return np.diag(np.array(self.signs, dtype=float))

    def apply(self, s):
        return np.asarray(s, dtype=float) * np.array(self.signs, dtype=float)


SYMMETRIES = {
    "id": Symmetry("id", "symplectic", (1, 1, 1, 1, 1, 1)),
    "-id": Symmetry("-id", "symplectic", (-1, -1, -1, -1, -1, -1)),
    # reflection at the orbit plane z=0
    "sigma": Symmetry("sigma", "symplectic", (1, 1, -1, 1, 1, -1)),
    "-sigma": Symmetry("-sigma", "symplectic", (-1, -1, 1, -1, -1, 1)),
    # time-reversal symmetries; fixed sets: XOZ plane, OX axis, YOZ plane, OY axis
    "rho1": Symmetry("rho1", "antisymplectic", (1, -1, 1, -1, 1, -1), free=(0, 2, 4), zero=(1, 3, 5)),
    "rho2": Symmetry("rho2", "antisymplectic", (1, -1, -1, -1, 1, 1), free=(0, 4, 5), zero=(1, 2, 3)),
    "rho3": Symmetry("rho3", "antisymplectic", (-1, 1, 1, 1, -1, -1), free=(1, 2, 3), zero=(0, 4, 5)),
    "rho4": Symmetry("rho4", "antisymplectic", (-1, 1, -1, 1, -1, 1), free=(1, 3, 5), zero=(0, 2, 4)),
}

# human-oriented aliases naming the fixed sets
SECTION_ALIASES = {"XOZ": "rho1", "OX": "rho2", "YOZ": "rho3", "OY": "rho4"}


def get_symmetry(tag):
    """Look up a symmetry by tag or by fixed-set alias (XOZ, OX, YOZ, OY)."""
    if isinstance(tag, Symmetry):
        return tag
    return SYMMETRIES[SECTION_ALIASES.get(tag, tag)]


def apply_symmetry(sym, s, time_sense=None):
    """Apply a symmetry to a phase point.

    ``time_sense`` records the trajectory contract: +1 for symplectic
    symmetries (images are forward trajectories), -1 for antisymplectic ones
    (images are time-reversed trajectories).  Passing the wrong sense raises.
    """
    sym = get_symmetry(sym)
    expected = 1 if sym.kind == "symplectic" else -1
    if time_sense is not None and int(time_sense) != expected:
        raise ValueError(
            f"symmetry {sym.tag} is {sym.kind}: it maps trajectories to "
            f"time_sense={expected:+d} trajectories"
        )
    return sym.apply(s)


def compose(sym_a, sym_b):
    """The symmetry acting as sym_a after sym_b (matrix product)."""
    a = get_symmetry(sym_a)
    b = get_symmetry(sym_b)
    signs = tuple(int(sa * sb) for sa, sb in zip(a.signs, b.signs))
    for sym in SYMMETRIES.values():
        if sym.signs == signs:
            return sym
    raise ValueError("composition left the symmetry group")  # pragma: no cover


# ----------------------------------------------------------------------------
# equilibria and collinear linear analysis
# ----------------------------------------------------------------------------


def lagrange_points():
    """The two collinear equilibria and their energy.

    Returns ``(s_plus, s_minus, gamma)`` where the states are at rest in the
    rotating frame (px = -y, py = x, pz = 0).
    """
    x = LAGRANGE_X
    s_plus = np.array([x, 0.0, 0.0, 0.0, x, 0.0])
    s_minus = np.array([-x, 0.0, 0.0, 0.0, -x, 0.0])
    return s_plus, s_minus, GAMMA_L


@dataclass(frozen=True)
class LinearAnalysis:
    """Linearization data at a collinear equilibrium.

    ``c`` is the gravity-gradient parameter entering the second derivatives of
    the effective potential (Uxx = 2c+1, Uyy = 1-c, Uzz = -c), ``omega_p`` and
    ``omega_v`` the planar and vertical frequencies, ``alpha1`` the square of
    the real exponent.  ``mu_cz_planar_lyap`` / ``mu_cz_vertical_lyap`` are
    the indices with which the two Lyapunov families are born.
    """

    mode: str
    point: str
    mass_ratio: float
    x_eq: float
    c: float
    omega_p: float
    omega_v: float
    alpha1: float
    eigenvalues: tuple
    mu_cz_planar_lyap: int = 3
    mu_cz_vertical_lyap: int = 5


class RootFindingError(RuntimeError):
    pass


def _collinear_x(mu, point, tol=1e-14):
    """Collinear equilibrium x for mass ratio mu via bisection + Newton.

    The equilibrium condition along the x axis is
        x + A (1-mu)/(x+mu)^2 + B mu/(x-1+mu)^2 = 0
    with signs (A, B) fixed by which side of the primaries the point lies on.
    """
    if point == "L1":
        a_sgn, b_sgn = -1.0, 1.0
        lo, hi = -mu + 1e-9, 1.0 - mu - 1e-9
    elif point == "L2":
        a_sgn, b_sgn = -1.0, -1.0
        lo, hi = 1.0 - mu + 1e-9, 3.0
    elif point == "L3":
        a_sgn, b_sgn = 1.0, 1.0
        lo, hi = -3.0, -mu - 1e-9
    else:
        raise ValueError(f"unknown collinear point {point!r}")

    def f(x):
        return x + a_sgn * (1.0 - mu) / (x + mu) ** 2 + b_sgn * mu / (x - 1.0 + mu) ** 2

    def fprime(x):
        return 1.0 - 2.0 * a_sgn * (1.0 - mu) / (x + mu) ** 3 - 2.0 * b_sgn * mu / (x - 1.0 + mu) ** 3

    flo, fhi = f(lo), f(hi)
    if not (np.isfinite(flo) and np.isfinite(fhi)) or flo * fhi > 0:
        raise RootFindingError(
            f"no sign change for {point} at mu={mu}: f({lo})={flo}, f({hi})={fhi}"
        )
    # bisect to a comfortable Newton basin, then polish
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if flo * fm <= 0:
            hi, fhi = mid, fm
        else:
            lo, flo = mid, fm
        if hi - lo < 1e-6:
            break
    x = 0.5 * (lo + hi)
    for _ in range(50):
        step = f(x) / fprime(x)
        x -= step
        if abs(step) < tol:
            return x
    raise RootFindingError(
        f"Newton stalled for {point} at mu={mu}: bracket [{lo},{hi}], last x={x}"
    )  # pragma: no cover


def collinear_linear_analysis(mode="hill", mu=None, point=None, tol=1e-14):
    """Linearize at a collinear equilibrium.

    ``mode="hill"`` analyzes the Hill equilibria (no further arguments).
    ``mode="scr3bp"`` requires a mass ratio ``mu`` in (0, 1/2] and ``point``
    in {"L1", "L2", "L3"}.  In both cases the planar characteristic polynomial
    is  lambda^4 + (4 - Uxx - Uyy) lambda^2 + Uxx Uyy = 0, giving one real
    exponent pair and the planar frequency; the vertical frequency is sqrt(c).
    """
    if mode == "hill":
        x_eq = LAGRANGE_X
        c = 1.0 / x_eq**3 + 1.0  # = 4: the tidal term contributes the +1
        mu_val = 0.0
        pt = point or "L2"
    elif mode == "scr3bp":
        if mu is None or not (0.0 < mu <= 0.5):
            raise ValueError("scr3bp mode needs a mass ratio mu in (0, 1/2]")
        pt = point or "L2"
        x_eq = _collinear_x(mu, pt, tol)
        c = (1.0 - mu) / abs(x_eq + mu) ** 3 + mu / abs(x_eq - 1.0 + mu) ** 3
        mu_val = float(mu)
    else:
        raise ValueError(f"unknown mode {mode!r}")

    uxx = 2.0 * c + 1.0
    uyy = 1.0 - c
    beta1 = 2.0 - 0.5 * (uxx + uyy)
    beta2 = -uxx * uyy
    disc = np.sqrt(beta1 * beta1 + beta2)
    omega_p = float(np.sqrt(beta1 + disc))
    alpha1 = float(disc - beta1)
    omega_v = float(np.sqrt(c))
    lam = float(np.sqrt(alpha1))
    eigs = (
        complex(lam, 0.0),
        complex(-lam, 0.0),
        complex(0.0, omega_p),
        complex(0.0, -omega_p),
        complex(0.0, omega_v),
        complex(0.0, -omega_v),
    )
    return LinearAnalysis(
        mode=mode,
        point=pt,
        mass_ratio=mu_val,
        x_eq=float(x_eq),
        c=float(c),
        omega_p=omega_p,
        omega_v=omega_v,
        alpha1=alpha1,
        eigenvalues=eigs,
    )
