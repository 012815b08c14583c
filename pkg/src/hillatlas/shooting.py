"""Differential correction of symmetric periodic orbits.

A symmetric periodic orbit is pinned down by a short arc between fixed sets
of time-reversal symmetries: half a period between two hits of the same set
(simply symmetric), or a quarter period between hits of two different sets
(doubly symmetric).  The corrector is a free-time Newton iteration on the
free coordinates of the starting section plus the arc duration; the arrival
conditions are the vanishing of the zero-coordinates of the target section.

The unknowns are always physical section coordinates.  The arc itself may
be propagated in the physical chart or — for orbits passing close to the
origin — in the regularized chart, in which case the condition Jacobian is
obtained by converting the chart variations to a physical transition matrix
and the arc duration is measured in the fictitious time.

The rectilinear consecutive-collision orbits are a special case: their
initial condition is exact in the regularized chart and the period is found
by a single event search, no Newton iteration involved.
"""

from dataclasses import dataclass, field

import numpy as np

from . import dynamics as dyn
from . import ks
from . import propagation as prop

MAX_ITER_DEFAULT = 25
TOL_DEFAULT = 1e-11


class CorrectionError(RuntimeError):
    """Newton correction failed (non-convergence or rank-deficient system)."""


@dataclass
class CorrectionReport:
    """Diagnostics of one correction run."""

    iterations: int
    residual: float
    condition: float
    history: list = field(default_factory=list)


@dataclass
class PeriodicOrbit:
    """A symmetric periodic orbit anchored at a symmetry-section point.

    ``s0`` is the physical state at the first section hit, lying on the
    fixed set of ``signature[0]`` exactly.  ``t_part`` is the physical
    duration of the defining arc (quarter period for two section symmetries,
    half period for one); ``tau_part`` is the same arc measured in the
    fictitious time when the orbit is handled in the regularized chart.
    ``n`` counts the covering multiplicity for orbits born as n-fold covers.
    """

    chart: str
    s0: np.ndarray
    signature: tuple
    t_part: float
    tau_part: float | None = None
    kind: str = "generic"
    n: int = 1
    alpha: float = ks.ALPHA_DEFAULT

    @property
    def parts(self):
        """Number of defining arcs making up one full period."""
        if self.kind == "collision":
            return 1
        return 4 if len(self.signature) == 2 else 2

    @property
    def T(self):
        return self.parts * self.t_part

    @property
    def gamma(self):
        return dyn.jacobi_constant(self.s0)

    @property
    def tau_period(self):
        """Fictitious-time span covering one physical period (chart runs)."""
        if self.tau_part is None:
            return None
        return self.parts * self.tau_part

    def describe(self):
        tags = "-".join(self.signature)
        return f"{tags} orbit, Gamma={self.gamma:.8f}, T={self.T:.8f}"


def section_state(sym, free_values):
    """Physical state on the fixed set of ``sym`` with the given free coords."""
    sym = dyn.get_symmetry(sym)
    s = np.zeros(6)
    s[list(sym.free)] = np.asarray(free_values, dtype=float)
    return s


def project_to_section(s, sym):
    """Zero out the section's vanishing coordinates of a nearby state."""
    sym = dyn.get_symmetry(sym)
    s = np.asarray(s, dtype=float).copy()
    s[list(sym.zero)] = 0.0
    return s


# ---------------------------------------------------------------------------
# the shooting arc in either chart
# ---------------------------------------------------------------------------


def _shoot(chart, s0, duration, alpha):
    """Propagate one arc; return (s_end, X, ds_end/d duration, t_phys).

    ``X`` is the transition matrix of the physical endpoint with respect to
    the physical initial state at fixed physical arrival time; the duration
    sensitivity is taken at fixed initial state (chart time for chart runs).
    """
    if chart == "phys":
        res = prop.integrate_hill_variational(s0, duration)
        s_end, x = prop.split_hill_var(res.y)
        return s_end, x, dyn.hill_rhs(s_end), duration
    if chart == "reg":
        w0 = ks.ks_lift(s0, alpha)
        h = ks.reg_energy(w0, alpha)
        res = prop.integrate_reg_variational(w0, duration, alpha)
        w_end, t_end, ymat, zeta = ks.unpack_reg_var_state(res.y)
        s_end = ks.ks_state_to_phys(w_end, alpha)
        x = ks.reg_to_phys_stm(w_end, ymat, zeta, w0, alpha)
        ds_dtau = ks.phys_jacobian(w_end, alpha) @ ks.reg_rhs(w_end, h, alpha)
        return s_end, x, ds_dtau, t_end
    raise ValueError(f"unknown chart {chart!r}")


def _closing_row(closing, s0, sym_a, xi):
    """Extra scalar equation selecting one orbit of the one-parameter family.

    Supported forms:
      ("gamma", value)           pin the Jacobi constant of the start state
      ("coord", index, value)    pin one physical coordinate (must be free)
      ("arclength", xi_ref, tangent, ds)   pseudo-arclength step condition
      None                       no row; the Newton system is solved in the
                                 minimal-norm sense (stays near the guess)
    """
    free = list(dyn.get_symmetry(sym_a).free)
    if closing is None:
        return None, None
    kind = closing[0]
    if kind == "gamma":
        value = closing[1]
        row = np.zeros(4)
        row[:3] = (-2.0 * dyn.grad_hamiltonian(s0))[free]
        return dyn.jacobi_constant(s0) - value, row
    if kind == "coord":
        index, value = closing[1], closing[2]
        if index not in free:
            raise ValueError(f"coordinate {index} is not free on this section")
        row = np.zeros(4)
        row[free.index(index)] = 1.0
        return s0[index] - value, row
    if kind == "arclength":
        xi_ref, tangent, ds = closing[1], closing[2], closing[3]
        return float(tangent @ (xi - xi_ref) - ds), np.asarray(tangent, dtype=float)
    raise ValueError(f"unknown closing condition {closing!r}")


def _correct(guess, closing, max_iter, tol):
    """Free-time Newton on (free section coordinates, arc duration)."""
    sym_a = dyn.get_symmetry(guess.signature[0])
    sym_b = dyn.get_symmetry(guess.signature[-1])
    free = list(sym_a.free)
    zero_b = list(sym_b.zero)
    chart = guess.chart
    alpha = guess.alpha

    duration0 = guess.tau_part if chart == "reg" else guess.t_part
    if duration0 is None or duration0 <= 0.0:
        raise CorrectionError("the guess must carry a positive arc duration")
    xi = np.empty(4)
    xi[:3] = guess.s0[free]
    xi[3] = duration0

    def evaluate(xi_try):
        s0 = section_state(sym_a, xi_try[:3])
        s_end, x, ds_dt, t_phys = _shoot(chart, s0, xi_try[3], alpha)
        f_cond = s_end[zero_b]
        jac = np.empty((3, 4))
        jac[:, :3] = x[np.ix_(zero_b, free)]
        jac[:, 3] = ds_dt[zero_b]
        extra_f, extra_row = _closing_row(closing, s0, sym_a, xi_try)
        if extra_f is None:
            return f_cond, jac, t_phys
        return (
            np.concatenate([f_cond, [extra_f]]),
            np.vstack([jac, extra_row]),
            t_phys,
        )

    f_val, jac, t_phys = evaluate(xi)
    res_norm = float(np.max(np.abs(f_val)))
    history = [res_norm]
    cond = float(np.linalg.cond(jac))
    iterations = 0

    while res_norm > tol:
        if iterations >= max_iter:
            raise CorrectionError(
                f"no convergence after {max_iter} iterations (residual {res_norm:.3e})"
            )
        if cond > 1e12:
            raise CorrectionError(
                f"rank-deficient correction system (cond {cond:.3e}); "
                "the orbit sits too close to a bifurcation for this closing"
            )
        if jac.shape[0] == jac.shape[1]:
            step = np.linalg.solve(jac, f_val)
        else:
            step = np.linalg.lstsq(jac, f_val, rcond=None)[0]

        accepted = False
        scale = 1.0
        for _ in range(9):
            xi_try = xi - scale * step
            if xi_try[3] <= 0.0:
                scale *= 0.5
                continue
            f_try, jac_try, t_try = evaluate(xi_try)
            norm_try = float(np.max(np.abs(f_try)))
            if norm_try < res_norm or norm_try <= tol:
                xi, f_val, jac, t_phys = xi_try, f_try, jac_try, t_try
                res_norm = norm_try
                accepted = True
                break
            scale *= 0.5
        if not accepted:
            raise CorrectionError(
                f"residual stopped decreasing at {res_norm:.3e} (iteration {iterations})"
            )
        history.append(res_norm)
        cond = float(np.linalg.cond(jac))
        iterations += 1

    s0 = section_state(sym_a, xi[:3])
    orbit = PeriodicOrbit(
        chart=chart,
        s0=s0,
        signature=guess.signature,
        t_part=t_phys,
        tau_part=xi[3] if chart == "reg" else None,
        kind=guess.kind,
        n=guess.n,
        alpha=alpha,
    )
    report = CorrectionReport(
        iterations=iterations, residual=res_norm, condition=cond, history=history
    )
    return orbit, report


def correct_doubly_symmetric(guess, closing=None, max_iter=MAX_ITER_DEFAULT, tol=TOL_DEFAULT):
    """Correct an orbit with two section symmetries from a quarter-period arc."""
    if len(guess.signature) != 2:
        raise ValueError("doubly symmetric correction needs a two-symmetry signature")
    return _correct(guess, closing, max_iter, tol)


def correct_simply_symmetric(guess, closing=None, max_iter=MAX_ITER_DEFAULT, tol=TOL_DEFAULT):
    """Correct an orbit with a single section symmetry from a half-period arc."""
    if len(guess.signature) != 1:
        raise ValueError("simply symmetric correction needs a one-symmetry signature")
    return _correct(guess, closing, max_iter, tol)


def correct_collision_orbit(a, alpha=ks.ALPHA_DEFAULT):
    """The rectilinear consecutive-collision orbit with apex height ``a``.

    The initial condition is exact: the apex (0, 0, a) at rest, lifted to
    the chart.  The orbit falls onto the origin, passes it regularly, and
    returns to the apex; the physical period is read off the time component
    at the first apex return (where u has flipped sign, closing the physical
    state while the chart state needs a second traversal).
    """
    if a <= 0.0:
        raise ValueError("the apex height must be positive")
    w0, h = ks.collision_orbit_ic(a, alpha)
    tau_guess = np.pi * np.sqrt(2.0 * a)
    res = prop.integrate_reg(w0, 1.6 * tau_guess, alpha=alpha, dense=True)
    hits = prop.find_crossings(
        res.trajectory, prop.apex_event(), direction=-1, t_min=1e-9, max_count=1
    )
    if not hits:
        raise CorrectionError("no apex return found for the collision orbit")
    apex = hits[0]
    tau_period = apex.t
    t_phys = apex.y[8]
    residual = float(
        max(np.max(np.abs(apex.y[:4] + w0[:4])), np.max(np.abs(apex.y[4:8])))
    )
    s0 = np.array([0.0, 0.0, a, 0.0, 0.0, 0.0])
    orbit = PeriodicOrbit(
        chart="reg",
        s0=s0,
        signature=("rho1", "rho3"),
        t_part=t_phys,
        tau_part=tau_period,
        kind="collision",
        alpha=alpha,
    )
    report = CorrectionReport(iterations=0, residual=residual, condition=1.0)
    return orbit, report


# ---------------------------------------------------------------------------
# derived quantities of a corrected orbit
# ---------------------------------------------------------------------------


def orbit_monodromy(orbit):
    """Physical-chart monodromy matrix over one period, from the defining arc.

    Generic orbits reuse the part-period transition matrix and close the
    loop through the reflection identities; collision orbits propagate the
    chart variations over the whole physical period directly (both apex
    endpoints are away from the origin, where the conversion is regular).
    """
    duration = orbit.tau_part if orbit.chart == "reg" else orbit.t_part
    _, x, _, _ = _shoot(orbit.chart, orbit.s0, duration, orbit.alpha)
    if orbit.kind == "collision":
        return x
    if orbit.parts == 4:
        return prop.monodromy_from_quarter(x, orbit.signature[0], orbit.signature[1])
    return prop.monodromy_from_half(x, orbit.signature[0])


def propagate_orbit(orbit, n_periods=1.0, dense=False):
    """Propagate the orbit's initial state in its own chart."""
    if orbit.chart == "phys":
        return prop.integrate_hill(orbit.s0, n_periods * orbit.T, dense=dense)
    w0 = ks.ks_lift(orbit.s0, orbit.alpha)
    return prop.integrate_reg(w0, n_periods * orbit.tau_period, alpha=orbit.alpha, dense=dense)


def closure_residual(orbit):
    """Max-norm gap between the initial state and its full-period image."""
    res = propagate_orbit(orbit)
    if orbit.chart == "phys":
        return float(np.max(np.abs(res.y - orbit.s0)))
    return float(np.max(np.abs(ks.ks_state_to_phys(res.y[:8], orbit.alpha) - orbit.s0)))


def symmetry_residual(orbit, n_samples=16):
    """How well the trajectory satisfies its declared reflection symmetries.

    For each symmetry in the signature the orbit is sampled symmetrically
    about the corresponding section hit (start of the arc for the first,
    end of the arc for the second) and compared with its reflection.
    """
    res = propagate_orbit(orbit, dense=True)
    traj = res.trajectory
    span = orbit.tau_period if orbit.chart == "reg" else orbit.T

    def phys_at(t):
        y = traj(t)
        if orbit.chart == "reg":
            return ks.ks_state_to_phys(y[:8], orbit.alpha)
        return y

    anchors = [0.0]
    if len(orbit.signature) == 2 and orbit.kind != "collision":
        anchors.append(span / 4.0)
    syms = [dyn.get_symmetry(tag) for tag in orbit.signature]
    worst = 0.0
    offsets = np.linspace(0.05, 0.45, n_samples) * span
    for sym, anchor in zip(syms, anchors):
        for d in offsets:
            t_fwd = anchor + d
            t_bwd = anchor - d
            if t_bwd < 0.0:
                t_bwd += span
            gap = np.max(np.abs(phys_at(t_fwd) - sym.apply(phys_at(t_bwd))))
            worst = max(worst, float(gap))
    if orbit.kind == "collision":
        # both reflections share the apex anchor
        sym2 = dyn.get_symmetry(orbit.signature[1])
        for d in offsets:
            gap = np.max(np.abs(phys_at(d) - sym2.apply(phys_at(span - d))))
            worst = max(worst, float(gap))
    return worst


# ---------------------------------------------------------------------------
# guess builders
# ---------------------------------------------------------------------------


def axis_orbit_guess(x0, vy0, t_part, signature=("OX", "OY"), chart="phys", tau_part=None):
    """Guess for a planar orbit crossing the x-axis perpendicularly."""
    s0 = dyn.state_from_velocities(x0, 0.0, 0.0, 0.0, vy0, 0.0)
    return PeriodicOrbit(
        chart=chart,
        s0=s0,
        signature=_canonical_signature(signature),
        t_part=t_part,
        tau_part=tau_part,
    )


def plane_orbit_guess(x0, z0, vy0, t_part, signature=("XOZ",), chart="phys", tau_part=None):
    """Guess for an orbit crossing the xz-plane perpendicularly."""
    s0 = dyn.state_from_velocities(x0, 0.0, z0, 0.0, vy0, 0.0)
    return PeriodicOrbit(
        chart=chart,
        s0=s0,
        signature=_canonical_signature(signature),
        t_part=t_part,
        tau_part=tau_part,
    )


def vertical_guess(x0, vy0, vz0, t_part, signature=("OX", "XOZ"), chart="phys", tau_part=None):
    """Guess for a three-dimensional orbit crossing the x-axis."""
    s0 = dyn.state_from_velocities(x0, 0.0, 0.0, 0.0, vy0, vz0)
    return PeriodicOrbit(
        chart=chart,
        s0=s0,
        signature=_canonical_signature(signature),
        t_part=t_part,
        tau_part=tau_part,
    )


def _canonical_signature(signature):
    return tuple(dyn.get_symmetry(tag).tag for tag in signature)
