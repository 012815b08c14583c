"""High-order propagation with dense output, events, and state-transition
matrices.

The integrator is an explicit Runge-Kutta 8(5,3) pair with adaptive step
control and a 7th-order dense interpolant (three extra stages per stored
step).  The coefficient tables are taken from scipy's published arrays; the
driver itself is written here in kernel form so that it runs compiled
together with the right-hand sides.  Four systems share the driver:

====  =========================================  ====
id    state layout                               dim
====  =========================================  ====
0     physical state                             6
1     physical state + 6x6 transition matrix     42
2     chart state (u, v) + physical time         9
3     chart state + 8x8 variations + time row    81
====  =========================================  ====

Events are located on the stored dense output by a bracketed Newton-secant
refinement.  Monodromy matrices of symmetric orbits are assembled from
part-period transition matrices by the reflection identities.
"""

from dataclasses import dataclass

import numpy as np
from scipy.integrate._ivp import dop853_coefficients as _dc

from ._jit import maybe_njit
from ._linalg import J6
from .dynamics import get_symmetry, hill_rhs_kernel, hill_var_rhs_kernel
from .ks import reg_rhs_kernel, reg_var_rhs_kernel

TOL_DEFAULT = 1e-12

_A = _dc.A
_B = _dc.B
_C = _dc.C
_E3 = _dc.E3
_E5 = _dc.E5
_D = _dc.D

SYS_HILL = 0
SYS_HILL_VAR = 1
SYS_REG = 2
SYS_REG_VAR = 3

_SYS_DIM = {SYS_HILL: 6, SYS_HILL_VAR: 42, SYS_REG: 9, SYS_REG_VAR: 81}

STATUS_OK = 0
STATUS_MAX_STEPS = 1
STATUS_STEP_UNDERFLOW = 2


class IntegrationError(RuntimeError):
    pass


@maybe_njit(cache=True)
def _rhs_dispatch(sys_id, t, y, p, out):
    if sys_id == 0:
        hill_rhs_kernel(t, y, p, out)
    elif sys_id == 1:
        hill_var_rhs_kernel(t, y, p, out)
    elif sys_id == 2:
        reg_rhs_kernel(t, y, p, out)
    else:
        reg_var_rhs_kernel(t, y, p, out)


@maybe_njit(cache=True)
def _drive(sys_id, t0, y0, t1, p, rtol, atol, h_init, max_step, dense, max_steps):
    """Adaptive RK 8(5,3) propagation from t0 to t1.

    Returns (status, t, y, nfev, naccept, ts, ys, coeffs); the last three
    hold the accepted grid and dense coefficients when ``dense``, otherwise
    they are size-zero.
    """
    n = y0.shape[0]
    safety = 0.9
    min_factor = 0.2
    max_factor = 10.0
    err_exp = -1.0 / 8.0
    sqrt_n = np.sqrt(n)

    y = y0.copy()
    t = t0
    f = np.empty(n)
    _rhs_dispatch(sys_id, t, y, p, f)
    nfev = 1
    direction = 1.0 if t1 >= t0 else -1.0
    span = abs(t1 - t0)

    # initial step size (Hairer-style two-evaluation guess)
    if h_init > 0.0:
        h_abs = h_init
    else:
        d0 = 0.0
        d1 = 0.0
        for j in range(n):
            sc = atol + rtol * abs(y[j])
            d0 += (y[j] / sc) ** 2
            d1 += (f[j] / sc) ** 2
        d0 = np.sqrt(d0) / sqrt_n
        d1 = np.sqrt(d1) / sqrt_n
        if d0 < 1e-5 or d1 < 1e-5:
            h0 = 1e-6
        else:
            h0 = 0.01 * d0 / d1
        y1 = y + h0 * direction * f
        f1 = np.empty(n)
        _rhs_dispatch(sys_id, t + h0 * direction, y1, p, f1)
        nfev += 1
        d2 = 0.0
        for j in range(n):
            sc = atol + rtol * abs(y[j])
            d2 += ((f1[j] - f[j]) / sc) ** 2
        d2 = np.sqrt(d2) / sqrt_n / h0
        if d1 <= 1e-15 and d2 <= 1e-15:
            h1 = max(1e-6, h0 * 1e-3)
        else:
            h1 = (0.01 / max(d1, d2)) ** 0.125
        h_abs = min(100.0 * h0, h1)
    if h_abs > span:
        h_abs = span
    if h_abs > max_step:
        h_abs = max_step

    cap = 512 if dense else 1
    ts = np.empty(cap + 1)
    ys = np.empty((cap + 1, n))
    coeffs = np.empty((cap, 7, n))
    ts[0] = t0
    for j in range(n):
        ys[0, j] = y0[j]

    kmat = np.empty((16, n))
    y_new = np.empty(n)
    y_stage = np.empty(n)
    status = STATUS_MAX_STEPS
    naccept = 0
    rejected = False

    while True:
        if direction * (t1 - t) <= 0.0:
            status = STATUS_OK
            break
        if naccept >= max_steps:
            status = STATUS_MAX_STEPS
            break
        if h_abs < 1e-14 * max(1.0, abs(t)):
            status = STATUS_STEP_UNDERFLOW
            break
        if h_abs > max_step:
            h_abs = max_step
        clamped = False
        if h_abs >= abs(t1 - t):
            h_abs = abs(t1 - t)
            clamped = True
        h = direction * h_abs

        # the twelve stages
        for j in range(n):
            kmat[0, j] = f[j]
        bad = False
        for s in range(1, 12):
            for j in range(n):
                acc = 0.0
                for m in range(s):
                    acc += _A[s, m] * kmat[m, j]
                y_stage[j] = y[j] + h * acc
            _rhs_dispatch(sys_id, t + _C[s] * h, y_stage, p, kmat[s])
        for j in range(n):
            acc = 0.0
            for m in range(12):
                acc += _B[m] * kmat[m, j]
            y_new[j] = y[j] + h * acc
            if not np.isfinite(y_new[j]):
                bad = True
        nfev += 11
        if not bad:
            _rhs_dispatch(sys_id, t + h, y_new, p, kmat[12])
            nfev += 1

        # stretched 8th/3rd order error estimate
        if bad:
            err_norm = np.inf
        else:
            err5_2 = 0.0
            err3_2 = 0.0
            for j in range(n):
                sc = atol + rtol * max(abs(y[j]), abs(y_new[j]))
                e5 = 0.0
                e3 = 0.0
                for m in range(13):
                    e5 += _E5[m] * kmat[m, j]
                    e3 += _E3[m] * kmat[m, j]
                err5_2 += (e5 / sc) ** 2
                err3_2 += (e3 / sc) ** 2
            if err5_2 == 0.0 and err3_2 == 0.0:
                err_norm = 0.0
            else:
                denom = err5_2 + 0.01 * err3_2
                err_norm = h_abs * err5_2 / np.sqrt(denom * n)
            if not np.isfinite(err_norm):
                err_norm = np.inf

        if err_norm < 1.0:
            # accepted
            if dense:
                # three extra stages feed the 7th-order interpolant
                for s in range(13, 16):
                    for j in range(n):
                        acc = 0.0
                        for m in range(s):
                            acc += _A[s, m] * kmat[m, j]
                        y_stage[j] = y[j] + h * acc
                    _rhs_dispatch(sys_id, t + _C[s] * h, y_stage, p, kmat[s])
                nfev += 3
                if naccept >= cap:
                    new_cap = 2 * cap
                    ts2 = np.empty(new_cap + 1)
                    ys2 = np.empty((new_cap + 1, n))
                    coeffs2 = np.empty((new_cap, 7, n))
                    ts2[: cap + 1] = ts
                    ys2[: cap + 1] = ys
                    coeffs2[:cap] = coeffs
                    ts = ts2
                    ys = ys2
                    coeffs = coeffs2
                    cap = new_cap
                for j in range(n):
                    dy = y_new[j] - y[j]
                    coeffs[naccept, 0, j] = dy
                    coeffs[naccept, 1, j] = h * kmat[0, j] - dy
                    coeffs[naccept, 2, j] = 2.0 * dy - h * (kmat[12, j] + kmat[0, j])
                    for i in range(4):
                        acc = 0.0
                        for m in range(16):
                            acc += _D[i, m] * kmat[m, j]
                        coeffs[naccept, 3 + i, j] = h * acc
            t = t1 if clamped else t + h
            for j in range(n):
                y[j] = y_new[j]
                f[j] = kmat[12, j]
            naccept += 1
            if dense:
                ts[naccept] = t
                for j in range(n):
                    ys[naccept, j] = y[j]
            if err_norm == 0.0:
                factor = max_factor
            else:
                factor = min(max_factor, safety * err_norm**err_exp)
            if rejected:
                factor = min(1.0, factor)
            h_abs *= factor
            rejected = False
        else:
            if err_norm == np.inf:
                h_abs *= min_factor
            else:
                h_abs *= max(min_factor, safety * err_norm**err_exp)
            rejected = True

    n_keep = naccept if dense else 0
    return status, t, y, nfev, naccept, ts[: n_keep + 1], ys[: n_keep + 1], coeffs[:n_keep]


# ---------------------------------------------------------------------------
# dense trajectories and event location
# ---------------------------------------------------------------------------


class Trajectory:
    """Continuous readout of one propagation (7th-order interpolant)."""

    def __init__(self, ts, ys, coeffs):
        self.ts = ts
        self.ys = ys
        self.coeffs = coeffs

    @property
    def t0(self):
        return self.ts[0]

    @property
    def t1(self):
        return self.ts[-1]

    @property
    def n_steps(self):
        return len(self.ts) - 1

    def _eval_one(self, t):
        ts = self.ts
        if ts[-1] >= ts[0]:
            k = int(np.searchsorted(ts, t, side="right")) - 1
        else:
            k = int(np.searchsorted(-ts, -t, side="right")) - 1
        k = min(max(k, 0), len(ts) - 2)
        hk = ts[k + 1] - ts[k]
        x = (t - ts[k]) / hk
        fr = self.coeffs[k]
        out = np.zeros(fr.shape[1])
        for i in range(6, -1, -1):
            out += fr[i]
            if (6 - i) % 2 == 0:
                out *= x
            else:
                out *= 1.0 - x
        return out + self.ys[k]

    def __call__(self, t):
        t_arr = np.asarray(t, dtype=float)
        if t_arr.ndim == 0:
            return self._eval_one(float(t_arr))
        return np.stack([self._eval_one(tv) for tv in t_arr])


@dataclass
class Crossing:
    """One located event: time, interpolated state, crossing direction."""

    t: float
    y: np.ndarray
    direction: int


def _refine_root(gfun, ta, tb, ga, gb, tol):
    """Bracketed root of a scalar function: Newton via secant slope,
    bisection whenever the candidate leaves the bracket."""
    t_mid = 0.5 * (ta + tb)
    for _ in range(120):
        g_mid = gfun(t_mid)
        if ga * g_mid <= 0.0:
            tb, gb = t_mid, g_mid
        else:
            ta, ga = t_mid, g_mid
        if abs(g_mid) <= tol or (tb - ta) <= 1e-15 * max(1.0, abs(t_mid)):
            return t_mid
        slope = (gb - ga) / (tb - ta)
        if slope != 0.0:
            t_new = t_mid - g_mid / slope
        else:
            t_new = 0.5 * (ta + tb)
        if not (ta < t_new < tb):
            t_new = 0.5 * (ta + tb)
        t_mid = t_new
    return t_mid


def find_crossings(
    traj,
    event,
    direction=0,
    t_min=None,
    t_max=None,
    max_count=None,
    tol=1e-12,
    samples_per_step=4,
):
    """Locate zeros of ``event(t, y)`` along a dense trajectory.

    ``direction`` +1/-1 keeps only upward/downward crossings (0 keeps both);
    ``t_min``/``t_max`` restrict the search window; the returned list is
    ordered by time.
    """
    lo = traj.t0 if t_min is None else t_min
    hi = traj.t1 if t_max is None else t_max
    if hi <= lo:
        return []

    def g_of_t(t):
        return float(event(t, traj(t)))

    found = []
    ts = traj.ts
    for k in range(traj.n_steps):
        a, b = ts[k], ts[k + 1]
        if b <= lo or a >= hi:
            continue
        a, b = max(a, lo), min(b, hi)
        grid = np.linspace(a, b, samples_per_step + 1)
        vals = [g_of_t(tv) for tv in grid]
        for i in range(samples_per_step):
            ga, gb = vals[i], vals[i + 1]
            if ga == 0.0 and grid[i] == lo:
                continue
            if ga * gb > 0.0 or (ga == 0.0 and gb == 0.0):
                continue
            sgn = 1 if gb > ga else -1
            if direction != 0 and sgn != direction:
                continue
            if ga == 0.0:
                t_star = grid[i]
            elif gb == 0.0:
                t_star = grid[i + 1]
            else:
                t_star = _refine_root(g_of_t, grid[i], grid[i + 1], ga, gb, tol)
            if found and abs(t_star - found[-1].t) < 1e-13 * max(1.0, abs(t_star)):
                continue
            found.append(Crossing(t=t_star, y=traj(t_star), direction=sgn))
            if max_count is not None and len(found) >= max_count:
                return found
    return found


# ---------------------------------------------------------------------------
# public propagation API
# ---------------------------------------------------------------------------


@dataclass
class Propagation:
    """Outcome of one propagation run."""

    status: int
    t: float
    y: np.ndarray
    nfev: int
    n_steps: int
    trajectory: Trajectory | None = None


def _run(sys_id, y0, t_final, params, t0, rtol, atol, dense, max_step, max_steps, h0, check):
    y0 = np.asarray(y0, dtype=float)
    if y0.shape != (_SYS_DIM[sys_id],):
        raise ValueError(f"state must have dimension {_SYS_DIM[sys_id]}")
    status, t, y, nfev, nacc, ts, ys, coeffs = _drive(
        sys_id,
        float(t0),
        y0,
        float(t_final),
        params,
        float(rtol),
        float(atol),
        float(h0),
        float(max_step),
        bool(dense),
        int(max_steps),
    )
    if check and status != STATUS_OK:
        reason = {
            STATUS_MAX_STEPS: "step budget exhausted",
            STATUS_STEP_UNDERFLOW: "step size underflow (singularity?)",
        }.get(status, "unknown")
        raise IntegrationError(f"propagation stopped at t={t:.6g}: {reason}")
    traj = Trajectory(ts.copy(), ys.copy(), coeffs.copy()) if dense else None
    return Propagation(status, t, y, nfev, nacc, traj)


_NO_PARAMS = np.empty(0)


def integrate_hill(
    s0,
    t_final,
    t0=0.0,
    rtol=TOL_DEFAULT,
    atol=TOL_DEFAULT,
    dense=False,
    max_step=np.inf,
    max_steps=1_000_000,
    h0=0.0,
    check=True,
):
    """Propagate a physical state to t_final."""
    return _run(
        SYS_HILL, s0, t_final, _NO_PARAMS, t0, rtol, atol, dense, max_step, max_steps, h0, check
    )


def integrate_hill_variational(
    s0,
    t_final,
    phi0=None,
    t0=0.0,
    rtol=TOL_DEFAULT,
    atol=TOL_DEFAULT,
    dense=False,
    max_step=np.inf,
    max_steps=1_000_000,
    h0=0.0,
    check=True,
):
    """Propagate a physical state together with its transition matrix.

    Returns a Propagation whose y is the packed 42-vector; unpack with
    :func:`split_hill_var`.
    """
    s0 = np.asarray(s0, dtype=float)
    phi = np.eye(6) if phi0 is None else np.asarray(phi0, dtype=float)
    y0 = np.concatenate([s0, phi.ravel()])
    return _run(
        SYS_HILL_VAR, y0, t_final, _NO_PARAMS, t0, rtol, atol, dense, max_step, max_steps, h0, check
    )


def split_hill_var(y):
    """Split a 42-dim variational state into (state, transition matrix)."""
    y = np.asarray(y, dtype=float)
    return y[:6].copy(), y[6:42].reshape(6, 6).copy()


def integrate_reg(
    w0,
    tau_final,
    h=None,
    alpha=None,
    t_phys0=0.0,
    rtol=TOL_DEFAULT,
    atol=TOL_DEFAULT,
    dense=False,
    max_step=np.inf,
    max_steps=1_000_000,
    h0=0.0,
    check=True,
):
    """Propagate a chart state (u, v) in the fictitious time.

    ``h`` defaults to the value putting w0 on the zero level of the rescaled
    Hamiltonian; the packed state carries physical time as component 8.
    """
    from . import ks

    if alpha is None:
        alpha = ks.ALPHA_DEFAULT
    w0 = np.asarray(w0, dtype=float)
    if h is None:
        h = ks.reg_energy(w0, alpha)
    y0 = ks.pack_reg_state(w0, t_phys0)
    params = np.array([alpha, h])
    return _run(SYS_REG, y0, tau_final, params, 0.0, rtol, atol, dense, max_step, max_steps, h0, check)


def integrate_reg_variational(
    w0,
    tau_final,
    alpha=None,
    rtol=TOL_DEFAULT,
    atol=TOL_DEFAULT,
    dense=False,
    max_step=np.inf,
    max_steps=1_000_000,
    h0=0.0,
    check=True,
):
    """Propagate a chart state with the energy-constrained variations.

    The energy parameter is solved from the initial condition, and the 8x8
    variational solution is the derivative of the flow with that re-solving
    taken into account (rank-one forcing).  Unpack the 81-dim result with
    :func:`hillatlas.ks.unpack_reg_var_state`.
    """
    from . import ks

    if alpha is None:
        alpha = ks.ALPHA_DEFAULT
    w0 = np.asarray(w0, dtype=float)
    y0 = ks.pack_reg_var_state(w0)
    params = ks.reg_var_params(w0, alpha)
    return _run(
        SYS_REG_VAR, y0, tau_final, params, 0.0, rtol, atol, dense, max_step, max_steps, h0, check
    )


def reg_time_event(t_phys_target):
    """Event function marking arrival at a given physical time (chart runs)."""

    def event(tau, y):
        return y[8] - t_phys_target

    return event


def apex_event():
    """Event u.v = 0: extrema of r along a chart trajectory.

    Downward crossings are apoapses (r maxima), upward crossings are
    periapses or collision passages (r minima).
    """

    def event(tau, y):
        return y[0] * y[4] + y[1] * y[5] + y[2] * y[6] + y[3] * y[7]

    return event


def coordinate_event(index, target=0.0):
    """Event on a single component of the raw integration state."""

    def event(t, y):
        return y[index] - target

    return event


# ---------------------------------------------------------------------------
# monodromy assembly for symmetric orbits
# ---------------------------------------------------------------------------


def symplectic_inverse(m):
    """Inverse of a symplectic 6x6 matrix via the structure identity."""
    return -J6 @ m.T @ J6


def monodromy_from_half(n_half, sym):
    """Monodromy of an orbit symmetric under one time-reversal symmetry.

    ``n_half`` is the transition matrix over half a period starting on the
    fixed set of ``sym``; the reflected half closes the loop:
    M = R N^{-1} R N.
    """
    sym = get_symmetry(sym)
    if sym.kind != "antisymplectic":
        raise ValueError("half-orbit reflection needs a time-reversal symmetry")
    r = sym.matrix
    return r @ symplectic_inverse(n_half) @ r @ n_half


def monodromy_from_quarter(p_quarter, sym_start, sym_end):
    """Monodromy of a doubly symmetric orbit from a quarter-period arc.

    The arc runs from the fixed set of ``sym_start`` to the fixed set of
    ``sym_end``; reflections extend it to the full loop:
    N = RB P^{-1} RB P (half), then M = RA N^{-1} RA N.
    """
    sym_a = get_symmetry(sym_start)
    sym_b = get_symmetry(sym_end)
    if sym_a.kind != "antisymplectic" or sym_b.kind != "antisymplectic":
        raise ValueError("quarter-orbit reflection needs time-reversal symmetries")
    rb = sym_b.matrix
    n_half = rb @ symplectic_inverse(p_quarter) @ rb @ p_quarter
    return monodromy_from_half(n_half, sym_a)
