"""Curated reference data for the family atlas.

This module pins the numerical backbone consumed by the validation suite and
the reproduction pipeline:

* ``TABLES`` — sampled rows (initial conditions, Floquet data, index strings)
  for every documented family, organised in blocks that mirror the curated
  data base layouts ``A.1`` … ``A.17``.
* ``CRITICAL_GAMMAS`` / ``CRITICALS`` — pinned energies of the critical
  orbits where families branch, fold, or change index.
* ``B0_INTERVALS`` / ``HALO_INTERVALS`` — the interval structure of the
  Floquet classification along the collision family and the halo family.
* ``GRAPHS`` — the pinned bifurcation graphs for the reproduction scenarios
  (vertices with energies and index jumps, edges with per-segment indices).
* ``COVERING_MATRIX`` / ``INTERACTIONS`` — which cover of each base family
  participates in each scenario, and the ledger of family interactions.
* ``SEEDS`` / ``ROTATION_ANCHORS`` — where each family reconstruction starts
  and how its rotation numbers are unwrapped there.

A few rows carry flags recording known transcription defects of the curated
data base (a value printed at the wrong scale, internally inconsistent
digits).  The validation layer treats flagged rows specially instead of
silently failing on them; the discrepancy report of the table exporter is
expected to single them out.

Sign conventions.  Initial conditions are printed in velocity form on the
symmetry section named by ``RefBlock.section``:

* ``OX``   rows ``(x, vy, vz)``  — perpendicular crossing of the x axis,
* ``XOZ``  rows ``(x, z, vy)``   — perpendicular crossing of the xz plane,
* ``YOZ``  rows ``(y, z, vx)``   — perpendicular crossing of the yz plane,
* ``OY``   rows ``(y, vx, vz)``  — perpendicular crossing of the y axis,
* ``AXIS`` rows ``(a,)``         — apex height of a vertical collision orbit.

``RefRow.arc`` is the printed time column; ``RefBlock.arc_factor`` converts
it to the arc time ``t_part`` of one correction part (``t_part = arc *
arc_factor``), matching the part convention of :mod:`hillatlas.shooting`.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import dynamics as dyn

__all__ = [
    "PairNote",
    "RefRow",
    "RefBlock",
    "MuInfo",
    "TABLES",
    "CRITICAL_GAMMAS",
    "CRITICALS",
    "B0_WINDOWS",
    "B0_INTERVALS",
    "HALO_INTERVALS",
    "FAMILY_INTERVALS",
    "GRAPHS",
    "COVERING_MATRIX",
    "INTERACTIONS",
    "CONNECTIONS",
    "SEEDS",
    "ROTATION_ANCHORS",
    "get_table",
    "get_block",
    "find_row",
    "iter_rows",
    "parse_mu",
    "row_state",
    "row_orbit",
]


# ---------------------------------------------------------------------------
# data model
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PairNote:
    """One recorded Floquet pair.

    ``kind`` is ``"ell"`` (elliptic, ``a`` = rotation angle mod 2*pi),
    ``"hyp"`` (hyperbolic, ``a`` = the multiplier with ``|lambda| > 1``,
    signed), ``"deg"`` (degenerate pair at +1, ``a`` = 0), or ``"cx"``
    (complex quadruple off the circle, ``a + i b`` one representative).
    ``c_sign``/``b_sign`` are the printed ``(C/B)`` signs, and ``resonance``
    is ``(m, k)`` when the angle was annotated as the root of unity
    ``2*pi*m/k``.
    """

    kind: str
    a: float = 0.0
    b: float = 0.0
    c_sign: str = ""
    b_sign: str = ""
    resonance: tuple = ()


def E(phi, cb="", res=()):
    """Elliptic pair with rotation angle ``phi`` and printed signs ``cb``."""
    return PairNote("ell", float(phi), 0.0, cb[:1], cb[1:], tuple(res))


def H(lam, cb=""):
    """Hyperbolic pair with dominant multiplier ``lam``."""
    return PairNote("hyp", float(lam), 0.0, cb[:1], cb[1:])


def D(phi=0.0):
    """Degenerate pair sitting at +1 (a vertex row)."""
    return PairNote("deg", float(phi))


def C(re, im):
    """Complex-unstable quadruple, one representative multiplier."""
    return PairNote("cx", float(re), float(im))


@dataclass(frozen=True)
class RefRow:
    """One sampled orbit: energy, section coordinates, arcs, Floquet data."""

    gamma: float
    ic: tuple
    arc: float
    pairs: tuple
    mu: str
    mu_p: str = ""
    mu_s: str = ""
    flags: tuple = ()
    arc2: float = 0.0


@dataclass(frozen=True)
class RefBlock:
    """A homogeneous run of rows belonging to one family."""

    table: str
    family: str
    section: str
    columns: tuple
    signature: tuple
    arc_factor: float
    rows: tuple
    bd_after: tuple = ()
    chart: str = "phys"
    cover: int = 1
    arc_label: str = "T"
    notes: str = ""


@dataclass(frozen=True)
class MuInfo:
    """Parsed index string: value on the high-energy / low-energy side."""

    above: int
    below: int
    above_bad: bool = False
    below_bad: bool = False

    @property
    def is_jump(self):
        return self.above != self.below or self.above_bad != self.below_bad


def parse_mu(text):
    """Parse index strings like ``"4"``, ``"6>5"``, ``"10>!11"``.

    The left token always sits on the higher-energy side of a jump; ``!``
    marks a cover whose index pairing is inadmissible for a closed orbit
    (an even cover with an odd number of negative-hyperbolic pairs).
    """

    def _tok(tok):
        tok = tok.strip()
        bad = tok.startswith("!")
        return int(tok[1:] if bad else tok), bad

    if ">" in text:
        left, right = text.split(">")
        above, above_bad = _tok(left)
        below, below_bad = _tok(right)
        return MuInfo(above, below, above_bad, below_bad)
    value, bad = _tok(text)
    return MuInfo(value, value, bad, bad)


# ---------------------------------------------------------------------------
# row -> state / orbit reconstruction
# ---------------------------------------------------------------------------

_ROW_FORMS = {
    "OX": lambda v: (v[0], 0.0, 0.0, 0.0, v[1], v[2] if len(v) > 2 else 0.0),
    "XOZ": lambda v: (v[0], 0.0, v[1], 0.0, v[2], 0.0),
    "YOZ": lambda v: (0.0, v[0], v[1], v[2], 0.0, 0.0),
    "OY": lambda v: (0.0, v[0], 0.0, v[1], 0.0, v[2]),
}


def row_state(block, row):
    """Physical state (positions and momenta) for a printed row."""
    if block.section == "AXIS":
        raise ValueError("collision rows have no physical section state")
    x, y, z, vx, vy, vz = _ROW_FORMS[block.section](row.ic)
    return dyn.state_from_velocities(x, y, z, vx, vy, vz)


def _row_t_part(block, row):
    """Arc time of one correction part, honouring the scale-defect flags."""
    arc = row.arc
    if "arc-half" in row.flags:
        # printed value holds half the column's native arc
        arc = row.arc * 2.0
    if "arc-double" in row.flags:
        # printed value holds twice the column's native arc
        arc = row.arc * 0.5
    return arc * block.arc_factor


def row_orbit(block, row):
    """Reconstruct the (uncorrected) periodic-orbit object for a row."""
    from . import shooting  # local import: refdata stays import-light

    if block.section == "AXIS":
        return shooting.correct_collision_orbit(row.ic[0])
    s0 = row_state(block, row)
    t_part = _row_t_part(block, row)
    return shooting.PeriodicOrbit(
        chart=block.chart,
        s0=s0,
        signature=block.signature,
        t_part=t_part,
    )


# ---------------------------------------------------------------------------
# data-base blocks
# ---------------------------------------------------------------------------

_R = RefRow


def _b0row(h, a, t_phys, t_reg, p1, p2, mu, flags=()):
    return _R(
        gamma=2.0 * h,
        ic=(a,),
        arc=t_phys,
        arc2=t_reg,
        pairs=(p1, p2),
        mu=mu,
        flags=tuple(flags),
    )


TABLES = {}

TABLES["A.1"] = (
    RefBlock(
        table="A.1",
        family="g",
        section="OX",
        columns=("gamma", "x", "vy", "T"),
        signature=("OX", "OY"),
        arc_factor=0.25,
        arc_label="T",
        rows=(
            _R(6.50888000, (0.17610000, 2.22291184), 0.50799,
               (E(0.449, "+-"), E(0.535, "+-")), "6", "3", "3",
               flags=("ic-inconsistent",)),
            _R(4.61076708, (0.27482506, 1.70093381), 1.14495,
               (E(0.403, "+-"), E(1.256, "+-", (1, 5))), "6", "3", "3"),
            _R(4.49999001, (0.28350000, 1.67206473), 1.22588,
               (D(), E(1.349, "+-")), "6>5", "3>2", "3"),
            _R(4.27892454, (0.30115821, 1.62301941), 1.41824,
               (H(2.265, "--"), E(1.570, "+-", (1, 4))), "5", "2", "3"),
            _R(3.87661638, (0.32764501, 1.59674819), 1.88441,
               (H(8.531, "--"), E(2.094, "+-", (1, 3))), "5", "2", "3"),
            _R(3.05747078, (0.31084341, 1.91481277), 1.47270,
               (H(154.0, "--"), E(3.141, "+-", (1, 2))), "5", "2", "3",
               flags=("arc-half",)),
            _R(1.38309359, (0.16471506, 3.29248839), 5.13725,
               (H(1916.0, "--"), D()), "5>6", "2", "3>4"),
            _R(-0.1080506, (0.05018349, 6.32213172), 8.68858,
               (H(6358.0, "--"), H(19.82, "--")), "6", "2", "4"),
        ),
    ),
    RefBlock(
        table="A.1",
        family="g-prime",
        section="OX",
        columns=("gamma", "x", "vy", "T"),
        signature=("OX",),
        arc_factor=0.5,
        arc_label="T",
        rows=(
            _R(4.49900000, (0.29609310, 1.58702411), 1.22740,
               (E(0.060, "+-"), E(1.352, "+-")), "6", "3", "3"),
            _R(4.43571163, (0.39943360, 1.02470483), 1.34305,
               (E(0.556, "+-"), E(1.570, "+-", (1, 4))), "6", "3", "3"),
            _R(4.34794216, (0.49144348, 0.66802090), 1.61196,
               (E(1.087, "+-"), E(2.094, "+-", (1, 3))), "6", "3", "3"),
            _R(4.28518367, (0.57085389, 0.44267629), 2.10280,
               (E(1.862, "+-"), E(3.141, "+-", (1, 2))), "6", "3", "3"),
            _R(4.28339957, (0.57326914, 0.43735070), 2.12705,
               (E(1.924, "+-"), H(-1.064, "--")), "6", "3", "3"),
            _R(4.28060260, (0.57696026, 0.42952310), 2.16637,
               (E(2.041, "+-"), E(3.141, "-+", (1, 2))), "6", "3", "3"),
            _R(4.27143000, (0.58768999, 0.40971127), 2.30206,
               (E(3.141, "+-"), E(3.475, "-+")), "6", "3", "3"),
            _R(3.39015957, (0.46469701, 1.24961994), 3.63057,
               (H(-313.0, "++"), D()), "6>7", "3", "3>4"),
            _R(2.99284694, (0.40956592, 1.54712782), 3.83068,
               (H(-380.0, "++"), H(1.565, "--")), "7", "3", "4"),
            _R(0.47715675, (0.11419691, 4.13226025), 6.96993,
               (H(-531.0, "++"), D()), "7>8", "3", "4>5"),
            _R(-0.2195269, (0.05994922, 5.79584998), 9.02460,
               (H(-686.0, "++"), E(3.141, "+-")), "8", "3", "5"),
            _R(-4.6921898, (0.00430199, 21.6700782), 14.3845,
               (H(-1.0, "++"), H(-18.5, "--")), "8", "3", "5"),
            _R(-4.6984899, (0.00429200, 21.6952015), 14.3861,
               (E(4.406, "-+"), H(-18.5, "--")), "8", "3", "5"),
            _R(-4.7047599, (0.00428299, 21.7179010), 14.3877,
               (D(), H(-18.5, "--")), "8>9", "3>4", "5"),
            _R(-6.1484362, (0.00271894, 27.2226731), 14.6597,
               (H(484.0, "--"), H(-21.9, "--")), "9", "4", "5"),
        ),
    ),
    RefBlock(
        table="A.1",
        family="f",
        section="OX",
        columns=("gamma", "x", "vy", "T"),
        signature=("OX", "OY"),
        arc_factor=0.25,
        arc_label="T",
        rows=(
            _R(4.10040135, (0.20043381, -2.449178), 0.52285,
               (E(5.746, "-+"), E(5.796, "-+")), "2", "1", "1"),
            _R(1.85814713, (0.33473167, -2.110195), 1.05798,
               (E(5.217, "-+"), E(5.385, "-+", (6, 7))), "2", "1", "1"),
            _R(1.35929329, (0.38953765, -2.056749), 1.29459,
               (E(5.003, "-+"), E(5.235, "-+", (5, 6))), "2", "1", "1"),
            _R(0.75514105, (0.48121754, -2.023782), 1.70487,
               (E(4.670, "-+"), E(5.026, "-+", (4, 5))), "2", "1", "1"),
            _R(0.01538803, (0.65507201, -2.079680), 2.50295,
               (E(4.180, "-+", (2, 3)), E(4.802, "-+")), "2", "1", "1"),
            _R(-0.9745559, (1.02352062, -2.464016), 4.04268,
               (E(4.001, "-+"), E(5.027, "-+", (4, 5))), "2", "1", "1"),
            _R(-1.0169813, (1.04098059, -2.487803), 4.10384,
               (E(4.015, "-+"), E(5.038, "-+")), "2", "1", "1"),
            _R(-1.3789005, (1.18705433, -2.700192), 4.56284,
               (E(4.172, "-+"), E(5.235, "-+", (5, 6))), "2", "1", "1"),
            _R(-1.4116179, (1.19987901, -2.719849), 4.59821,
               (E(4.186, "-+", (2, 3)), E(5.252, "-+")), "2", "1", "1"),
        ),
    ),
)

TABLES["A.2"] = (
    RefBlock(
        table="A.2",
        family="a",
        section="OX",
        columns=("gamma", "x", "vy", "T/2"),
        signature=("OX",),
        arc_factor=1.0,
        arc_label="T/2",
        notes="printed column header says T but holds the half period",
        rows=(
            _R(4.32674461, (0.69301979, 0.00226843), 1.51650,
               (H(2013.0, "--"), E(6.066, "-+")), "3", "2", "1"),
            _R(4.29958936, (0.66424043, 0.18712196), 1.51842,
               (H(1988.0, "--"), E(6.075, "-+")), "3", "2", "1"),
            _R(4.19914612, (0.62673486, 0.41277806), 1.52572,
               (H(1896.0, "--"), E(6.113, "-+")), "3", "2", "1"),
            _R(4.00531266, (0.58126467, 0.67012429), 1.54072,
               (H(1729.0, "--"), D()), "3>4", "2", "1>2"),
            _R(3.53719088, (0.50138826, 1.09813675), 1.58282,
               (H(1368.0, "--"), H(1.310, "++")), "4", "2", "2"),
            _R(2.50801682, (0.36280204, 1.84377527), 1.71899,
               (H(771.0, "--"), H(1.610, "++")), "4", "2", "2"),
            _R(1.27025055, (0.21731494, 2.84159454), 2.04661,
               (H(344.0, "--"), H(1.203, "++")), "4", "2", "2"),
            _R(1.22806326, (0.21266090, 2.88309804), 2.06338,
               (H(334.0, "--"), D()), "4>5", "2", "2>3"),
            _R(0.35543459, (0.12430197, 3.97250147), 2.54074,
               (H(183.0, "--"), E(1.570, "+-", (1, 4))), "5", "2", "3"),
            _R(0.14728017, (0.10657722, 4.31885774), 2.69141,
               (H(136.0, "--"), E(2.094, "+-", (1, 3))), "5", "2", "3"),
            _R(-0.0293890, (0.09298784, 4.64365350), 2.82554,
               (H(151.0, "--"), H(-1.005, "++")), "5", "2", "3"),
            _R(-1.0101392, (0.04351254, 6.85416494), 3.47956,
               (H(161.0, "--"), H(-7.287, "++")), "5", "2", "3"),
            _R(-5.0382072, (0.00668157, 17.4461722), 4.16967,
               (H(660.0, "--"), H(-19.93, "++")), "5", "2", "3"),
            _R(-20.072597, (0.00084643, 48.8151941), 4.36630,
               (H(4470.0, "--"), H(-104.7, "++")), "5", "2", "3"),
        ),
    ),
)

TABLES["A.3"] = (
    RefBlock(
        table="A.3",
        family="vertical-lyapunov",
        section="OX",
        columns=("gamma", "x", "vy", "vz", "T/4"),
        signature=("OX", "XOZ"),
        arc_factor=1.0,
        arc_label="T/4",
        rows=(
            _R(4.32674501, (0.69336109, -0.0000003, 0.00192343), 0.78539,
               (H(2643.0, "--"), E(0.224, "+-")), "5"),
            _R(4.00068753, (0.67716025, -0.0337281, 0.57212194), 0.79637,
               (H(2277.0, "--"), E(0.312, "+-")), "5"),
            _R(3.44534553, (0.64980144, -0.0977783, 0.94323002), 0.81850,
               (H(1747.0, "--"), E(0.426, "+-")), "5"),
            _R(1.76907143, (0.57526073, -0.3534217, 1.60483043), 0.92540,
               (H(741.0, "--"), E(0.610, "+-")), "5"),
            _R(0.99685263, (0.55075032, -0.4979227, 1.81565624), 1.00336,
               (H(517.0, "--"), E(0.505, "+-")), "5"),
            _R(0.51340845, (0.54017719, -0.5858314, 1.92905572), 1.06094,
               (H(434.0, "--"), E(0.026, "+-")), "5"),
            _R(0.51243056, (0.54010280, -0.5857445, 1.92940524), 2.12213,
               (H(434.0, "--"), D()), "5>4", flags=("arc-double",)),
            _R(0.50987996, (0.54011322, -0.5864402, 1.92984507), 1.06138,
               (H(433.0, "--"), H(1.043, "--")), "4"),
            _R(0.00016214, (0.53253936, -0.6664139, 2.04012641), 1.12512,
               (H(384.0, "--"), H(1.990, "--")), "4"),
            _R(-0.7861576, (0.52483978, -0.7511302, 2.20431806), 1.21702,
               (H(361.0, "--"), H(3.445, "--")), "4"),
            _R(-1.0022561, (0.52300796, -0.7661806, 2.24941523), 1.23923,
               (H(362.0, "--"), H(3.901, "--")), "4"),
            _R(-3.4329113, (0.49998087, -0.8042084, 2.74522415), 1.39588,
               (H(441.0, "--"), H(9.037, "--")), "4"),
            _R(-10.006029, (0.44463920, -0.7154704, 3.81906694), 1.50629,
               (H(589.0, "--"), H(16.14, "--")), "4"),
            _R(-20.006907, (0.39588947, -0.6260203, 5.01369195), 1.54138,
               (H(662.0, "--"), H(19.58, "--")), "4"),
            _R(-100.00786, (0.28236807, -0.4321420, 10.3510032), 1.56688,
               (H(728.0, "--"), H(22.75, "--")), "4"),
            _R(-252.41663, (0.22743801, -0.3447978, 16.1631227), 1.56964,
               (H(736.0, "--"), H(23.16, "--")), "4"),
        ),
    ),
)

TABLES["A.4"] = (
    RefBlock(
        table="A.4",
        family="a-2v",
        section="OX",
        columns=("gamma", "x", "vy", "vz", "T/2"),
        signature=("OX",),
        arc_factor=1.0,
        arc_label="T/2",
        rows=(
            _R(1.22806326, (0.21266090, 2.88309804, 0.0), 2.06338,
               (H(334.0, "--"), D()), "4>5", flags=("host",)),
            _R(1.22802128, (0.21266912, 2.88287276, 0.03142903), 2.06338,
               (H(334.0, "--"), H(1.080, "--")), "4"),
            _R(1.22108891, (0.21403149, 2.84579684, 0.40273942), 2.06390,
               (H(335.0, "--"), H(1.133, "--")), "4"),
            _R(1.17618650, (0.22307958, 2.61172890, 1.05706649), 2.06728,
               (H(341.0, "--"), H(1.337, "--")), "4"),
            _R(0.88594065, (0.29420463, 1.29568353, 2.11965140), 2.09010,
               (H(381.0, "--"), H(1.696, "--")), "4"),
            _R(0.71338374, (0.35510469, 0.59978837, 2.22200585), 2.10452,
               (H(405.0, "--"), H(1.592, "--")), "4"),
            _R(0.53270943, (0.47870335, -0.2813710, 2.06241226), 2.12031,
               (H(431.0, "--"), H(1.183, "--")), "4"),
            _R(0.51343480, (0.52627680, -0.5220859, 1.96091173), 2.12204,
               (H(433.0, "--"), H(1.039, "--")), "4"),
            _R(0.51243056, (0.54010280, -0.5857445, 1.92940524), 2.12213,
               (H(434.0, "--"), D()), "5>4", flags=("terminal",)),
        ),
    ),
)

TABLES["A.5"] = (
    RefBlock(
        table="A.5",
        family="B0",
        section="AXIS",
        columns=("h", "a", "T_phys", "T_reg"),
        signature=(),
        arc_factor=1.0,
        arc_label="T_phys",
        chart="reg",
        rows=(
            _b0row(99.99994999, 0.01000000, 0.00222144, 0.44428819,
                   E(0.002, "+-"), E(6.280, "-+"), "4"),
            _b0row(4.97999999, 0.20000000, 0.19814798, 1.98345564,
                   E(0.216, "+-"), E(6.103, "-+"), "4"),
            _b0row(1.88856793, 0.49700000, 0.74773069, 3.05324244,
                   E(0.485, "+-"), E(5.234, "-+", (5, 6)), "4"),
            _b0row(1.68244383, 0.54600000, 0.85050489, 3.17538556,
                   E(0.505, "+-"), E(5.026, "-+", (4, 5)), "4"),
            _b0row(1.45659562, 0.60900000, 0.98340707, 3.31417136,
                   E(0.509, "+-"), E(4.715, "-+", (3, 4)), "4"),
            _b0row(1.20565470, 0.69200000, 1.15671788, 3.46760468,
                   E(0.464, "+-"), E(4.183, "-+", (2, 3)), "4"),
            _b0row(1.02698947, 0.76000000, 1.29470522, 3.57019296,
                   E(0.365, "+-"), E(3.244, "-+"), "4"),
            _b0row(1.02449994, 0.76100000, 1.29669744, 3.57155529,
                   E(0.363, "+-"), H(-1.069, "--"), "4"),
            _b0row(0.85581107, 0.83200000, 1.43485036, 3.65809380,
                   E(0.015, "+-"), H(-2.747, "--"), "4"),
            _b0row(0.85353569, 0.83300000, 1.43674636, 3.65917411,
                   H(1.044, "++"), H(-2.765, "--"), "3"),
            _b0row(-0.0438103, 1.28309999, 2.12146646, 3.85484925,
                   H(1.020, "++"), H(-3.199, "--"), "3"),
            _b0row(-0.0439993, 1.28319999, 2.12158150, 3.85484589,
                   E(6.240, "-+"), H(-3.194, "--"), "2"),
            _b0row(-0.0909060, 1.30799999, 2.14965375, 3.85358596,
                   E(5.297, "-+"), H(-1.051, "--"), "2"),
            _b0row(-0.0910952, 1.30809999, 2.14976511, 3.85357921,
                   E(5.293, "-+"), E(3.062, "+-"), "2"),
            _b0row(-0.1098366, 1.31799999, 2.16071853, 3.85284573,
                   E(4.626, "-+"), E(1.799, "+-"), "2"),
            _b0row(-0.1100260, 1.31809999, 2.16082845, 3.85283767,
                   C(-0.160, 1.023), C(-0.149, -0.953), "2",
                   flags=("cx-misprint",)),
        ),
    ),
)

TABLES["A.6"] = (
    RefBlock(
        table="A.6",
        family="halo",
        section="XOZ",
        columns=("gamma", "x", "z", "vy", "T/2"),
        signature=("XOZ",),
        arc_factor=1.0,
        arc_label="T/2",
        bd_after=(8,),
        rows=(
            _R(4.00531266, (0.58126467, 0.0, 0.67012429), 1.54072,
               (H(1729.0, "--"), D()), "3>4", flags=("host",)),
            _R(4.00515953, (0.58123897, 0.00401081, 0.67021204), 1.54072,
               (H(1728.0, "--"), E(6.277, "-+")), "3"),
            _R(3.37457564, (0.47879236, 0.24044127, 0.99410946), 1.52904,
               (H(936.0, "--"), E(5.636, "-+")), "3"),
            _R(2.39415881, (0.31610954, 0.33704920, 1.45608154), 1.49250,
               (H(288.0, "--"), E(4.718, "-+")), "3"),
            _R(1.56135153, (0.15584832, 0.33687541, 1.94583333), 1.40672,
               (H(65.81, "--"), E(3.596, "-+")), "3"),
            _R(1.35081531, (0.10748085, 0.31650269, 2.13708475), 1.35823,
               (H(36.28, "--"), E(3.177, "-+")), "3"),
            _R(1.32815770, (0.10188012, 0.31327120, 2.16242790), 1.35134,
               (H(33.52, "--"), H(-1.006, "++")), "3"),
            _R(1.30643677, (0.09641040, 0.30990567, 2.18807549), 1.34429,
               (H(30.93, "--"), E(3.078, "+-")), "3"),
            _R(1.06906400, (0.01217005, 0.20896812, 2.90557406), 1.14860,
               (H(1.425, "--"), E(2.114, "+-")), "3"),
            _R(1.06918032, (0.01045115, 0.20459396, 2.94143145), 1.14015,
               (E(0.520, "+-"), E(2.109, "+-")), "4"),
            _R(1.09017936, (0.00031658, 0.17050278, 3.25741357), 1.07360,
               (E(1.359, "+-"), E(2.717, "+-")), "4"),
            _R(1.09503056, (-0.0005576, 0.16637772, 3.30122122), 1.06545,
               (E(1.358, "+-"), E(3.079, "+-")), "4"),
            _R(1.10031869, (-0.0013571, 0.16228718, 3.34615458), 1.05735,
               (E(1.351, "+-"), H(-1.500, "--")), "4"),
            _R(1.23205144, (-0.0065206, 0.10225856, 4.27507204), 0.93566,
               (E(1.009, "+-"), H(-3.506, "--")), "4"),
            _R(1.67137739, (-0.0002326, 0.00621210, 17.8900841), 0.73106,
               (E(0.199, "+-"), H(-10.47, "--")), "4"),
        ),
    ),
)

TABLES["A.7"] = (
    RefBlock(
        table="A.7",
        family="5.3-bridge",
        section="YOZ",
        columns=("gamma", "y", "z", "vx", "T/2"),
        signature=("YOZ", "XOZ"),
        arc_factor=0.5,
        arc_label="T/2",
        rows=(
            _R(1.38309359, (-1.2529662, 0.0, -0.461647), 2.56862,
               (H(1916.0, "--"), D()), "5>6", flags=("host",)),
            _R(1.38309305, (-1.2529661, 0.00071779, -0.461647), 2.56862,
               (H(1915.0, "--"), E(6.284, "-+")), "5"),
            _R(1.28937954, (-1.2249340, 0.30063425, -0.453785), 2.55455,
               (H(1729.0, "--"), E(5.108, "-+")), "5"),
            _R(0.70296101, (-1.0086006, 0.82343385, -0.393753), 2.43480,
               (H(750.0, "--"), E(3.140, "+-")), "5"),
            _R(0.11441123, (-0.6259848, 1.15611372, -0.265029), 2.25850,
               (H(91.07, "--"), E(2.093, "+-")), "5"),
            _R(-0.0724601, (-0.3894917, 1.25238451, -0.170009), 2.19137,
               (H(1.508, "--"), E(1.238, "+-")), "5"),
            _R(-0.0729364, (-0.3886668, 1.25262752, -0.169662), 2.19119,
               (E(6.164, "-+"), E(1.191, "+-")), "4"),
            _R(-0.0738861, (-0.3870163, 1.25311197, -0.168969), 2.19084,
               (E(5.516, "-+"), E(0.991, "+-")), "4"),
            _R(-0.0743595, (-0.3861908, 1.25335342, -0.168622), 2.19066,
               (C(0.748, 1.012), C(0.472, 0.638)), "4"),
            _R(-0.1169347, (-0.3018156, 1.27503630, -0.132736), 2.17464,
               (C(-0.313, 0.405), C(-1.194, 1.544)), "4"),
            _R(-0.1357071, (-0.2551303, 1.28457780, -0.112565), 2.16750,
               (C(-0.806, 0.490), C(-0.905, 0.550)), "4"),
            _R(-0.1360193, (-0.2542773, 1.28473640, -0.112195), 2.16738,
               (E(2.681, "+-"), E(3.761, "-+")), "4"),
            _R(-0.1795710, (-0.0578809, 1.30683695, -0.025731), 2.15060,
               (E(4.957, "+-"), E(5.462, "-+")), "4",
               flags=("floquet-suspect",)),
            _R(-0.1812191, (-0.0316733, 1.30767000, -0.014084), 2.14996,
               (E(5.561, "+-"), E(5.473, "-+")), "4",
               flags=("floquet-suspect",)),
        ),
        notes=(
            "the last two rows print a B-negative first pair with an angle"
            " beyond pi and a second angle that cannot reach the junction"
            " value continuously; treated as recording defects"
        ),
    ),
)

TABLES["A.8"] = (
    RefBlock(
        table="A.8",
        family="5.4-bridge",
        section="XOZ",
        columns=("gamma", "x", "z", "vy", "T/2"),
        signature=("XOZ",),
        arc_factor=1.0,
        arc_label="T/2",
        rows=(
            _R(3.39015957, (0.46469701, 0.0, 1.24961994), 1.81528,
               (H(-313.0, "++"), D()), "6>7", flags=("host",)),
            _R(2.44399049, (0.30902151, 0.25094832, 1.67439737), 1.92782,
               (H(-235.0, "++"), E(4.974, "-+")), "6"),
            _R(2.00005693, (0.22711359, 0.27473750, 1.92093361), 1.99454,
               (H(-174.0, "++"), E(4.512, "-+")), "6"),
            _R(1.44481307, (0.11024344, 0.26163775, 2.35956487), 2.08186,
               (H(-79.24, "++"), E(3.854, "-+")), "6"),
            _R(1.12698114, (0.02171818, 0.19957730, 2.96596840), 2.12652,
               (H(-5.956, "++"), E(3.235, "-+")), "6"),
            _R(1.12675701, (0.02162326, 0.19946262, 2.96705177), 2.12655,
               (H(-5.891, "++"), E(3.197, "-+")), "6"),
            _R(1.12653383, (0.02152852, 0.19934800, 2.96813498), 2.12657,
               (H(-5.82, "++"), H(-1.04, "--")), "6"),
            _R(1.11533406, (0.01643016, 0.19290616, 3.02961983), 2.12800,
               (H(-2.20, "++"), H(-1.92, "--")), "6"),
            _R(1.11516321, (0.01634580, 0.19279481, 3.03069414), 2.12802,
               (C(-2.035, 0.125), C(-0.489, 0.030)), "6"),
            _R(1.11192239, (0.01469364, 0.19058020, 3.05215027), 2.12843,
               (C(-1.614, 0.845), C(-0.486, 0.254)), "6"),
            _R(1.10873380, (0.01295099, 0.18817194, 3.07568743), 2.12883,
               (C(-1.182, 0.986), C(-0.498, 0.416)), "6"),
            _R(1.10677726, (0.01180601, 0.18654694, 3.09169807), 2.12908,
               (C(-0.918, 0.960), C(-0.519, 0.544)), "6"),
            _R(1.10568540, (0.01113531, 0.18557862, 3.10129029), 2.12922,
               (C(-0.689, 0.816), C(-0.603, 0.714)), "6"),
            _R(1.10556782, (0.01106153, 0.18547135, 3.10235545), 2.12923,
               (E(2.347, "+-"), E(4.100, "-+")), "6"),
            _R(1.09640282, (0.00313731, 0.17295905, 3.23036225), 2.13038,
               (E(2.722, "+-"), E(5.833, "-+")), "6"),
            _R(1.09514652, (-0.0005977, 0.16624448, 3.30266771), 2.13054,
               (E(2.721, "+-"), E(6.268, "-+")), "6"),
        ),
    ),
)

TABLES["A.9"] = (
    RefBlock(
        table="A.9",
        family="5.5-blue",
        section="OX",
        columns=("gamma", "x", "vy", "vz", "T/4"),
        signature=("OX", "XOZ"),
        arc_factor=1.0,
        arc_label="T/4",
        bd_after=(5,),
        rows=(
            _R(3.05747078, (0.31084341, 1.91481277, 0.0), 1.47270,
               (H(23815.0, "--"), D()), "9>11", flags=("host",)),
            _R(3.05716289, (0.31087152, 1.91410150, 0.05001676), 1.47272,
               (H(23812.0, "--"), E(6.283, "-+")), "9"),
            _R(3.03212558, (0.31338563, 1.85273226, 0.46022029), 1.47408,
               (H(21671.0, "--"), E(6.253, "-+")), "9"),
            _R(2.96788006, (0.31997032, 1.69864936, 0.83930502), 1.47753,
               (H(16844.0, "--"), E(6.175, "-+")), "9"),
            _R(2.51039425, (0.38439023, 0.66230773, 1.64233599), 1.48011,
               (H(717.0, "--"), E(5.519, "-+")), "9"),
            _R(2.48109234, (0.40172637, 0.52122149, 1.64617771), 1.45914,
               (H(178.0, "--"), E(6.191, "-+")), "9"),
            _R(2.48109169, (0.40184824, 0.52041786, 1.64606280), 1.45894,
               (H(176.0, "--"), H(1.059, "++")), "10"),
            _R(2.48870072, (0.41044997, 0.46985620, 1.63359817), 1.44355,
               (H(61.81, "--"), H(3.658, "++")), "10"),
            _R(2.50295114, (0.41642487, 0.44149750, 1.62022989), 1.43103,
               (C(10.74, 9.160), C(0.053, 0.045)), "10"),
            _R(3.12959441, (0.48831941, 0.36660863, 1.24380510), 1.23056,
               (C(-3.255, 6.526), C(-0.061, 0.122)), "10"),
            _R(3.60043961, (0.52367949, 0.39770440, 0.93980961), 1.14287,
               (C(-4.573, 3.287), C(-0.144, 0.103)), "10"),
            _R(4.13509328, (0.56078154, 0.43347032, 0.43230683), 1.06877,
               (E(2.861, "+-"), E(3.584, "-+")), "10"),
            _R(4.23337089, (0.56739106, 0.43954564, 0.25324354), 1.05725,
               (E(3.582, "-+"), E(5.025, "-+")), "10"),
            _R(4.28501385, (0.57084256, 0.44266610, 0.01447540), 1.05141,
               (E(3.724, "-+"), E(6.241, "-+")), "10"),
            _R(4.28518367, (0.57085389, 0.44267629, 0.0), 1.05140,
               (E(3.725, "-+"), D()), "10>!11", flags=("terminal",)),
        ),
    ),
    RefBlock(
        table="A.9",
        family="5.5-green",
        section="OY",
        columns=("gamma", "y", "vx", "vz", "T/4"),
        signature=("OY", "YOZ"),
        arc_factor=1.0,
        arc_label="T/4",
        rows=(
            _R(3.05747078, (0.63711372, -0.285808, 0.0), 1.47270,
               (H(23815.0, "--"), D()), "9>11", flags=("host",)),
            _R(3.05743405, (0.63711753, -0.285788, 0.00540410), 1.47271,
               (H(23812.0, "--"), H(1.001, "++")), "10"),
            _R(3.02802472, (0.63633639, -0.272252, 0.20210342), 1.47547,
               (H(21756.0, "--"), H(1.034, "++")), "10"),
            _R(2.46500674, (0.61911875, 0.00023522, 0.87486638), 1.53627,
               (H(2207.0, "--"), H(2.303, "++")), "10"),
            _R(2.21485185, (0.60997731, 0.13194422, 1.02300994), 1.56936,
               (H(391.5, "--"), H(4.594, "++")), "10"),
            _R(2.06317522, (0.60401605, 0.21610186, 1.09603603), 1.59183,
               (H(30.76, "--"), H(24.25, "++")), "10"),
            _R(2.05075380, (0.60351591, 0.22315723, 1.10152681), 1.59376,
               (C(20.65, 16.05), C(0.030, 0.023)), "10"),
            _R(1.97362294, (0.60037643, 0.26756287, 1.13403285), 1.60610,
               (C(-5.706, 18.35), C(-0.015, 0.049)), "10"),
            _R(1.78866702, (0.59269003, 0.37856697, 1.20102671), 1.63831,
               (C(-0.282, 1.555), C(-0.113, 0.622)), "10"),
            _R(1.78756578, (0.59264400, 0.37924840, 1.20137924), 1.63851,
               (E(1.767, "+-"), E(4.691, "-+")), "10"),
            _R(1.78481268, (0.59252892, 0.38095310, 1.20225815), 1.63903,
               (E(2.313, "+-"), E(5.858, "-+")), "10"),
            _R(1.78426205, (0.59250591, 0.38129423, 1.20243352), 1.63913,
               (E(2.362, "+-"), H(1.314, "++")), "11"),
            _R(1.40011846, (0.57732484, 0.63599519, 1.28827241), 1.72178,
               (E(4.712, "-+"), H(114.0, "++")), "11"),
            _R(0.99442488, (0.56940718, 0.94127947, 1.27749481), 1.84467,
               (E(5.219, "-+"), H(89.7, "++")), "11"),
        ),
    ),
    RefBlock(
        table="A.9",
        family="5.5-purple",
        section="XOZ",
        columns=("gamma", "x", "z", "vy", "T/4"),
        signature=("XOZ", "OX"),
        arc_factor=1.0,
        arc_label="T/4",
        rows=(
            _R(4.28060260, (0.57696026, 0.0, 0.42952310), 1.08318,
               (E(4.082, "-+"), D()), "!11>12", flags=("host",)),
            _R(4.28042203, (0.57693173, 0.00589982, 0.42956634), 1.08320,
               (E(4.083, "-+"), H(1.076, "--")), "11"),
            _R(4.26502446, (0.57449643, 0.05475651, 0.43326608), 1.08520,
               (E(4.096, "-+"), H(1.971, "--")), "11"),
            _R(4.16719573, (0.55888128, 0.14696743, 0.45734375), 1.09826,
               (E(4.161, "-+"), H(5.866, "--")), "11"),
            _R(3.20054711, (0.38851051, 0.41725089, 0.76563628), 1.26744,
               (E(4.110, "-+"), H(90.7, "--")), "11"),
            _R(2.16091622, (0.15818162, 0.48314089, 1.27075410), 1.51823,
               (E(6.084, "-+"), H(45.5, "--")), "11"),
            _R(2.15858839, (0.15759375, 0.48316389, 1.27193121), 1.51878,
               (H(1.128, "++"), H(43.2, "--")), "12"),
            _R(0.75439892, (-0.271167, 0.45097821, 1.75027650), 1.93630,
               (H(2.195, "--"), H(41.5, "++")), "12"),
            _R(0.25016553, (-0.474430, 0.36954104, 1.90112368), 2.28392,
               (H(1.329, "--"), H(7.493, "++")), "12"),
            _R(0.03056214, (-0.566387, 0.32487111, 1.97213842), 2.51532,
               (H(1.054, "--"), H(1.164, "++")), "12"),
            _R(0.02977310, (-0.566707, 0.32473366, 1.97238806), 2.51626,
               (E(6.182, "-+"), H(1.164, "++")), "11"),
            _R(-0.3001572, (-0.679486, 0.32682380, 2.05693207), 2.95767,
               (E(4.479, "-+"), H(1.123, "++")), "11"),
            _R(-0.5637974, (-0.718029, 0.45371150, 2.06381755), 3.31486,
               (E(6.157, "-+"), H(1.332, "++")), "11"),
            _R(-0.5645164, (-0.718066, 0.45417022, 2.06374381), 3.31574,
               (H(1.044, "--"), H(1.333, "++")), "12"),
            _R(-3.7494554, (-0.522734, 1.86063921, 1.46358031), 4.36178,
               (H(67.5, "--"), H(3536.0, "++")), "12"),
        ),
    ),
)

TABLES["A.10"] = (
    RefBlock(
        table="A.10",
        family="5.5-red",
        section="XOZ",
        columns=("gamma", "x", "z", "vy", "T/2"),
        signature=("XOZ",),
        arc_factor=1.0,
        arc_label="T/2",
        bd_after=(8,),
        rows=(
            _R(2.41130941, (0.0, 0.69200000, 0.0), 1.73507,
               (E(1.394, "+-"), D()), "12>10", flags=("host",)),
            _R(2.41752499, (0.02588751, 0.69087817, -0.003022), 1.73353,
               (E(1.391, "+-"), H(1.006, "--")), "11"),
            _R(2.42547679, (0.05559667, 0.68943016, -0.006474), 1.73603,
               (E(1.412, "+-"), H(1.003, "--")), "11"),
            _R(2.55016039, (0.20244802, 0.66638662, -0.019746), 1.77947,
               (E(1.618, "+-"), H(1.078, "--")), "11"),
            _R(2.76400139, (0.32243638, 0.62523161, -0.001058), 1.88212,
               (E(1.982, "+-"), H(1.387, "--")), "11"),
            _R(2.77077169, (0.32542301, 0.62388324, 0.00041078), 1.88629,
               (E(1.994, "+-"), H(1.403, "--")), "11"),
            _R(2.97595347, (0.40524984, 0.57871202, 0.11268542), 2.10610,
               (E(2.979, "+-"), H(2.179, "--")), "11"),
            _R(2.97759875, (0.40590433, 0.57821496, 0.11552374), 2.11077,
               (H(-1.09, "++"), H(2.169, "--")), "11"),
            _R(2.99155498, (0.41297605, 0.57205622, 0.16589640), 2.19062,
               (H(-2.43, "++"), H(1.256, "--")), "11"),
            _R(2.99158364, (0.41317197, 0.57182082, 0.16897831), 2.19534,
               (H(-2.52, "++"), E(0.101, "+-")), "12"),
            _R(2.92013850, (0.40246682, 0.57173374, 0.31527099), 2.39922,
               (H(-14.1, "++"), E(2.136, "+-")), "12"),
            _R(2.75650364, (0.36538414, 0.57887459, 0.48017443), 2.58244,
               (H(-40.1, "++"), E(3.092, "+-")), "12"),
            _R(2.75139781, (0.36414387, 0.57901169, 0.48490069), 2.58708,
               (H(-40.7, "++"), H(-1.11, "--")), "12"),
            _R(2.50133196, (0.29865726, 0.57636757, 0.71764117), 2.78781,
               (H(-54.9, "++"), H(-2.39, "--")), "12"),
            _R(2.31131248, (0.24021675, 0.55655443, 0.92270510), 2.92649,
               (H(-16.2, "++"), H(-9.12, "--")), "12"),
            _R(2.30562255, (0.23823969, 0.55554246, 0.92989293), 2.93061,
               (C(-11.78, 2.959), C(-0.079, 0.020)), "12"),
            _R(2.22051151, (0.20492250, 0.53415196, 1.05639576), 2.99240,
               (C(5.382, 9.627), C(0.044, 0.079)), "12"),
            _R(2.19784281, (0.19375644, 0.52478723, 1.10206834), 3.00895,
               (H(15.4, "--"), H(6.889, "++")), "12"),
            _R(2.15922539, (0.15736852, 0.48258340, 1.27371102), 3.03726,
               (H(43.3, "--"), H(1.017, "++")), "12", flags=("terminal",)),
        ),
    ),
    RefBlock(
        table="A.10",
        family="5.5-aqua",
        section="YOZ",
        columns=("gamma", "y", "z", "vx", "T/2"),
        signature=("YOZ",),
        arc_factor=1.0,
        arc_label="T/2",
        bd_after=(6,),
        rows=(
            _R(2.44336739, (0.04220599, 0.68488849, -0.047060), 1.74177,
               (E(1.445, "+-"), E(6.268, "-+")), "10"),
            _R(2.46042693, (0.05340102, 0.68099270, -0.061014), 1.74739,
               (E(1.469, "+-"), E(6.252, "-+")), "10"),
            _R(2.62682960, (0.11272525, 0.64243008, -0.163667), 1.81182,
               (E(1.726, "+-"), E(6.134, "-+")), "10"),
            _R(2.79319067, (0.14536102, 0.60166897, -0.275553), 1.90376,
               (E(1.920, "+-"), E(5.881, "-+")), "10"),
            _R(2.95990341, (0.15850662, 0.54706526, -0.502260), 2.13196,
               (E(3.037, "+-"), E(5.725, "-+")), "10"),
            _R(2.96046681, (0.15825903, 0.54647347, -0.506243), 2.13659,
               (H(-1.26, "--"), E(5.762, "-+")), "10"),
            _R(2.96189049, (0.15680656, 0.54375414, -0.525886), 2.15982,
               (H(-1.88, "--"), E(6.102, "-+")), "10"),
            _R(2.96190012, (0.15647442, 0.54325755, -0.529759), 2.16449,
               (H(-1.98, "--"), H(1.158, "++")), "11"),
            _R(2.80118956, (0.11352926, 0.53921875, -0.733178), 2.47280,
               (H(-7.03, "--"), H(13.79, "++")), "11"),
            _R(2.30050134, (0.02510498, 0.58807744, -0.866880), 2.89354,
               (H(-13.1, "--"), H(37.14, "++")), "11"),
            _R(2.13992280, (0.00096066, 0.60863957, -0.880708), 3.01237,
               (H(-15.3, "--"), H(33.37, "++")), "11"),
            _R(1.98603966, (-0.018240, 0.63126642, -0.884519), 3.12614,
               (H(-16.2, "--"), H(25.39, "++")), "11"),
            _R(1.81511411, (-0.024230, 0.66272946, -0.872630), 3.25471,
               (H(-8.87, "--"), H(10.08, "++")), "11"),
            _R(1.78982401, (-0.016895, 0.66916219, -0.866174), 3.27406,
               (H(-3.79, "--"), H(4.509, "++")), "11"),
            _R(1.78474531, (-0.010898, 0.67109917, -0.862944), 3.27796,
               (E(2.554, "+-"), H(1.667, "++")), "11", flags=("terminal",)),
        ),
    ),
)

TABLES["A.11"] = (
    RefBlock(
        table="A.11",
        family="f3",
        section="OX",
        columns=("gamma", "x", "vy", "T/2"),
        signature=("OX", "OY"),
        arc_factor=0.5,
        arc_label="T/2",
        bd_after=(23,),
        notes=(
            "rows run from the open end of the first branch up through the"
            " fold and back down the second branch; the two rows flagged"
            " 'touch' record a tangential +1 contact of the planar pair"
            " (the neighbouring index is 9/4/5 on both sides)"
        ),
        rows=(
            _R(-13.41209, (-4.8957388, 9.25880043), 14.8143,
               (H(2.4e13, "--"), H(16683.0, "++")), "16", "6", "10"),
            _R(-8.009081, (-3.8026329, 7.20521228), 14.5818,
               (H(1.3e12, "--"), H(5121.0, "++")), "16", "6", "10"),
            _R(-2.026588, (-2.0411151, 3.93762588), 13.1814,
               (H(2.7e9, "--"), H(1090.0, "++")), "16", "6", "10"),
            _R(0.26914524, (-1.1181292, 2.29569070), 9.05739,
               (H(1.3e8, "--"), H(1.802, "++")), "16", "6", "10"),
            _R(0.27322105, (-1.1170102, 2.29355807), 9.04601,
               (H(1.3e8, "--"), D()), "15>16", "6", "9>10"),
            _R(0.28326989, (-1.1142676, 2.28831996), 9.01799,
               (H(1.3e8, "--"), E(5.351, "-+")), "15", "6", "9"),
            _R(0.36886730, (-1.0918350, 2.24482130), 8.78148,
               (H(1.4e8, "--"), E(3.259, "-+")), "15", "6", "9"),
            _R(0.37546334, (-1.0901747, 2.24155034), 8.76345,
               (H(1.4e8, "--"), E(3.14159265, "-+")), "15", "6", "9",
               flags=("pi-approx",)),
            _R(0.50117172, (-1.0603453, 2.18128472), 8.42644,
               (H(1.5e8, "--"), E(0.557, "+-")), "15", "6", "9"),
            _R(0.50719121, (-1.0590014, 2.17849315), 8.41067,
               (H(1.5e8, "--"), D()), "14>15", "6", "8>9"),
            _R(0.51625279, (-1.0569924, 2.17430618), 8.38698,
               (H(1.5e8, "--"), H(1.956, "--")), "14", "6", "8"),
            _R(1.00924824, (-0.9703132, 1.96887407), 7.24362,
               (H(2.2e8, "--"), H(19.5, "--")), "14", "6", "8"),
            _R(2.13871776, (-0.8730776, 1.56167311), 5.58268,
               (H(3.5e8, "--"), H(1.315, "--")), "14", "6", "8"),
            _R(2.14663695, (-0.8726486, 1.55877618), 5.57414,
               (H(3.5e8, "--"), D()), "13>14", "6", "7>8"),
            _R(2.17336240, (-0.8712146, 1.54897640), 5.54553,
               (H(3.5e8, "--"), E(5.780, "-+")), "13", "6", "7"),
            _R(3.09825544, (-0.8278473, 1.17202498), 4.65719,
               (H(1.4e8, "--"), E(3.167, "-+")), "13", "6", "7"),
            _R(3.11068444, (-0.8272593, 1.16619514), 4.64517,
               (H(1.4e8, "--"), E(3.14159265, "-+")), "13", "6", "7",
               flags=("pi-approx",)),
            _R(3.79236129, (-0.7827436, 0.77512351), 3.51659,
               (H(1.0e5, "--"), E(0.149, "+-")), "13", "6", "7"),
            _R(3.79383981, (-0.7825020, 0.77394600), 3.50582,
               (H(89399.0, "--"), D()), "12>13", "6", "6>7"),
            _R(3.79578234, (-0.7821681, 0.77238178), 3.49062,
               (H(70190.0, "--"), H(1.183, "--")), "12", "6", "6"),
            _R(3.80619532, (-0.7790237, 0.76272829), 3.32501,
               (H(2.486, "--"), H(1.378, "--")), "12", "6", "6"),
            _R(3.80619588, (-0.7790204, 0.76272497), 3.32481,
               (E(6.128, "-+"), H(1.378, "--")), "11", "5", "6"),
            _R(3.80619962, (-0.7789911, 0.76269604), 3.32301,
               (E(3.191, "-+"), H(1.374, "--")), "11", "5", "6"),
            _R(3.80620096, (-0.7789619, 0.76266877), 3.32121,
               (E(0.704, "+-"), H(1.371, "--")), "11", "5", "6"),
            _R(3.80620097, (-0.7789586, 0.76266584), 3.32101,
               (H(1.819, "--"), H(1.370, "--")), "10", "4", "6"),
            _R(3.80619277, (-0.7788840, 0.76260385), 3.31638,
               (H(46.5, "--"), H(1.361, "--")), "10", "4", "6"),
            _R(3.80452746, (-0.7779453, 0.76285259), 3.25419,
               (H(3951.0, "--"), H(1.031, "--")), "10", "4", "6"),
            _R(3.80450408, (-0.7779387, 0.76286207), 3.25372,
               (H(3999.0, "--"), D()), "10>9", "4", "6>5"),
            _R(3.73995319, (-0.7747946, 0.80143382), 2.92466,
               (H(26170.0, "--"), E(5.048, "-+")), "9", "4", "5"),
            _R(2.50249325, (-0.7596676, 1.36437597), 2.25983,
               (H(1189.0, "--"), E(3.195, "-+")), "9", "4", "5"),
            _R(2.36181537, (-0.7559645, 1.41359771), 2.25420,
               (H(865.9, "--"), E(3.14159265, "-+")), "9", "4", "5",
               flags=("pi-approx",)),
            _R(1.50318272, (-0.7242787, 1.68283218), 2.35551,
               (H(109.2, "--"), E(2.855, "+-")), "9", "4", "5"),
            _R(0.88071085, (-0.6915719, 1.85635845), 2.63920,
               (H(18.2, "--"), E(2.556, "+-")), "9", "4", "5"),
            _R(0.30382199, (-0.6602227, 2.00826813), 3.24456,
               (H(2.643, "--"), E(2.079, "+-")), "9", "4", "5"),
            _R(0.01642127, (-0.6550587, 2.07943403), 3.75419,
               (H(1.003, "--"), E(1.851, "+-")), "9", "4", "5"),
            _R(0.01538803, (-0.6550720, 2.07968013), 3.75442,
               (D(), E(1.842, "+-")), "10>8", "5>3", "5",
               flags=("touch",)),
            _R(0.01254682, (-0.6551104, 2.08035636), 3.76210,
               (H(1.009, "--"), E(1.849, "+-")), "9", "4", "5"),
            _R(-0.301160, (-0.6773146, 2.15180453), 4.47006,
               (H(2.351, "--"), E(1.868, "+-")), "9", "4", "5"),
            _R(-0.660718, (-0.7650844, 2.24296044), 5.33355,
               (H(3.463, "--"), E(2.201, "+-")), "9", "4", "5"),
            _R(-1.003106, (-0.9278680, 2.39612247), 6.11102,
               (H(2.517, "--"), E(2.592, "+-")), "9", "4", "5"),
            _R(-1.377840, (-1.1762768, 2.68868042), 6.84227,
               (H(1.090, "--"), E(3.140, "+-")), "9", "4", "5"),
            _R(-1.378748, (-1.1769114, 2.68951172), 6.84379,
               (H(1.087, "--"), E(3.14159265, "-+")), "9", "4", "5",
               flags=("pi-approx",)),
            _R(-1.411617, (-1.1998790, 2.71984955), 6.89731,
               (D(), E(3.191, "-+")), "10>8", "5>3", "5",
               flags=("touch",)),
            _R(-1.415239, (-1.2024075, 2.72321888), 6.90382,
               (H(1.009, "--"), E(3.198, "-+")), "9", "4", "5"),
            _R(-2.803184, (-1.9999050, 3.97518454), 8.03399,
               (H(20.3, "--"), E(4.710, "-+")), "9", "4", "5"),
            _R(-4.694647, (-2.7330798, 5.27594542), 8.41761,
               (H(151.7, "--"), D()), "9>10", "4", "5>6"),
            _R(-4.703199, (-2.7359263, 5.28110715), 8.41855,
               (H(151.0, "--"), H(1.250, "++")), "10", "4", "6"),
            _R(-10.00263, (-4.1285139, 7.84990122), 8.66913,
               (H(1700.0, "--"), H(6.142, "++")), "10", "4", "6"),
            _R(-18.83157, (-5.7292410, 10.8468091), 8.75835,
               (H(10675.0, "--"), H(16.8, "++")), "10", "4", "6"),
        ),
    ),
)

TABLES["A.12"] = (
    RefBlock(
        table="A.12",
        family="5.7-blue",
        section="OX",
        columns=("gamma", "x", "vy", "vz", "T/2"),
        signature=("OX", "OY"),
        arc_factor=0.5,
        arc_label="T/2",
        rows=(
            _R(3.87661638, (0.32764501, 1.59674819, 0.0), 2.82662,
               (H(621.0, "--"), D()), "13>15", flags=("host",)),
            _R(3.87640420, (0.32765275, 1.59639061, 0.03500000), 2.82665,
               (H(620.0, "--"), H(1.005, "--")), "14"),
            _R(3.86641314, (0.32801741, 1.57957157, 0.24200000), 2.82814,
               (H(591.0, "--"), H(1.007, "--")), "14"),
            _R(3.69242900, (0.33442700, 1.29263199, 0.97599999), 2.85507,
               (H(238.0, "--"), H(1.024, "--")), "14"),
            _R(3.27414894, (0.35033597, 0.64724536, 1.54399999), 2.92956,
               (H(1.228, "--"), H(1.052, "--")), "14"),
            _R(3.27411847, (0.35034414, 0.64717939, 1.54400000), 2.92957,
               (H(1.229, "--"), D()), "14>15"),
            _R(3.27283294, (0.35038725, 0.64531070, 1.54499999), 2.92982,
               (H(1.230, "--"), E(0.334, "+-")), "15"),
            _R(3.17114089, (0.35437361, 0.49758728, 1.61299999), 2.95039,
               (H(1.402, "--"), E(3.154, "-+")), "15"),
            _R(2.80950999, (0.36898038, 0.00002321, 1.73760522), 3.03317,
               (H(17.6, "--"), E(5.879, "-+")), "15"),
            _R(2.65907416, (0.37527776, -0.194503, 1.74785021), 3.07285,
               (H(25.8, "--"), E(5.922, "-+")), "15"),
            _R(1.04320577, (0.45859879, -1.830635, 0.77305800), 3.92145,
               (H(2.559, "--"), E(6.213, "-+")), "15"),
            _R(0.81315693, (0.47618678, -1.988018, 0.33900000), 4.18381,
               (H(1.006, "--"), E(4.764, "-+")), "15"),
            _R(0.75520313, (0.48121199, -2.023744, 0.01100000), 4.26209,
               (H(1.002, "--"), E(4.503, "-+")), "15"),
            _R(0.75514105, (0.48121754, -2.023782, 0.0), 4.26218,
               (D(), E(4.502, "-+")), "16>14", flags=("terminal",)),
        ),
    ),
    RefBlock(
        table="A.12",
        family="5.7-green",
        section="XOZ",
        columns=("gamma", "x", "z", "vy", "T/2"),
        signature=("XOZ", "YOZ"),
        arc_factor=0.5,
        arc_label="T/2",
        bd_after=(5, 8),
        rows=(
            _R(3.83449454, (-0.320211, 0.07200000, -1.600516), 2.83292,
               (H(507.0, "--"), E(6.282, "-+")), "13"),
            _R(3.28342994, (-0.212345, 0.25049999, -1.696877), 2.92604,
               (H(1.725, "--"), E(6.083, "-+")), "13"),
            _R(3.28018017, (-0.211571, 0.25095034, -1.698326), 2.92662,
               (D(), E(6.081, "-+")), "13>14"),
            _R(3.27979990, (-0.211477, 0.25099999, -1.698519), 2.92669,
               (E(0.186, "+-"), E(6.080, "-+")), "14"),
            _R(3.18840410, (-0.186089, 0.25871925, -1.767536), 2.94134,
               (E(3.148, "-+"), E(5.966, "-+")), "14"),
            _R(3.13670109, (-0.150862, 0.24073735, -1.978218), 2.92889,
               (E(6.242, "-+"), E(4.689, "-+")), "14"),
            _R(3.13670119, (-0.150811, 0.24068735, -1.978646), 2.92882,
               (H(1.052, "++"), E(4.689, "-+")), "15"),
            _R(3.23116984, (-0.097655, 0.16638735, -2.671385), 2.77297,
               (H(3.714, "++"), E(4.346, "-+")), "15"),
            _R(3.36215224, (-0.042376, 0.07713735, -4.400187), 2.43258,
               (H(1.169, "++"), E(3.499, "-+")), "15"),
            _R(3.36215228, (-0.042344, 0.07708735, -4.401936), 2.43234,
               (E(6.264, "-+"), E(3.498, "-+")), "14"),
            _R(3.32943000, (-0.024918, 0.05053735, -5.671365), 2.29164,
               (E(5.662, "-+"), E(3.144, "-+")), "14"),
            _R(2.92863973, (-0.000101, 0.00118735, -40.93085), 1.97717,
               (E(6.251, "-+"), E(2.071, "+-")), "14"),
            _R(2.91319124, (0.0, 0.60900000, 0.0), 1.96681,
               (D(), E(2.036, "+-")), "16>14", flags=("terminal",)),
        ),
    ),
    RefBlock(
        table="A.12",
        family="5.7-red",
        section="OX",
        columns=("gamma", "x", "vy", "vz", "T/2"),
        signature=("OX",),
        arc_factor=1.0,
        arc_label="T/2",
        rows=(
            _R(4.34794216, (0.49144348, 0.66802090, 0.0), 2.41794,
               (E(3.261, "-+"), D()), "14>16", flags=("host",)),
            _R(4.34787218, (0.49143796, 0.66801275, 0.01050000), 2.41797,
               (E(3.260, "-+"), H(1.003, "--")), "15"),
            _R(4.33281911, (0.49024888, 0.66626052, 0.15450000), 2.42320,
               (E(3.238, "-+"), H(1.004, "--")), "15"),
            _R(4.30829740, (0.48829944, 0.66340694, 0.25049999), 2.43181,
               (H(-1.01, "--"), H(1.010, "--")), "15"),
            _R(4.00018907, (0.46229468, 0.62781839, 0.75700000), 2.55071,
               (H(-1.55, "--"), H(1.275, "--")), "15"),
            _R(3.72046700, (0.43529590, 0.59732094, 1.04200000), 2.67843,
               (E(3.126, "+-"), H(1.704, "--")), "15"),
            _R(3.30004379, (0.37055271, 0.60005910, 1.46600000), 2.91324,
               (E(0.786, "+-"), H(1.785, "--")), "15"),
            _R(3.27412407, (0.35064428, 0.64627184, 1.54300000), 2.92956,
               (E(0.030, "+-"), H(1.230, "--")), "15", flags=("terminal",)),
        ),
    ),
    RefBlock(
        table="A.12",
        family="5.7-purple",
        section="XOZ",
        columns=("gamma", "x", "z", "vy", "T/2"),
        signature=("XOZ",),
        arc_factor=1.0,
        arc_label="T/2",
        rows=(
            _R(4.34794216, (-0.132020, 0.0, -3.294474), 2.41794,
               (E(3.261, "-+"), D()), "14>16", flags=("host",)),
            _R(4.34793145, (-0.132019, 0.00040000, -3.294466), 2.41795,
               (E(3.262, "-+"), E(6.275, "-+")), "14"),
            _R(4.30700809, (-0.131939, 0.02499999, -3.261610), 2.43226,
               (H(-1.01, "--"), E(6.273, "-+")), "14"),
            _R(4.00262336, (-0.132826, 0.07950000, -2.993965), 2.54945,
               (H(-1.54, "--"), E(6.040, "-+")), "14"),
            _R(3.72437329, (-0.138067, 0.12000000, -2.692896), 2.67594,
               (E(3.054, "+-"), E(5.740, "-+")), "14"),
            _R(3.38108361, (-0.165351, 0.19232332, -2.132926), 2.86387,
               (C(0.555, 0.831), C(0.537, 0.843)), "14"),
            _R(3.28023996, (-0.210228, 0.24975719, -1.707726), 2.92659,
               (C(0.999, 0.146), C(0.979, 0.143)), "14"),
            _R(3.28018027, (-0.211514, 0.25089975, -1.698726), 2.92662,
               (E(0.004, "+-"), E(6.081, "-+")), "14", flags=("terminal",)),
        ),
    ),
)

TABLES["A.13"] = (
    RefBlock(
        table="A.13",
        family="5.7-orange",
        section="XOZ",
        columns=("gamma", "x", "z", "vy", "T/4"),
        signature=("XOZ", "YOZ"),
        arc_factor=1.0,
        arc_label="T/4",
        bd_after=(15, 25),
        rows=(
            _R(2.14663695, (-0.8726486, 0.0, 1.55877618), 2.78707,
               (H(3.5e8, "--"), D()), "13>14", flags=("host",)),
            _R(2.14662066, (-0.8726474, 0.00199999, 1.55877716), 2.78707,
               (H(3.5e8, "--"), E(6.265, "-+")), "13"),
            _R(2.10513484, (-0.8695323, 0.10069161, 1.56134706), 2.78918,
               (H(3.0e8, "--"), E(5.393, "-+")), "13"),
            _R(1.88106637, (-0.8539132, 0.25060633, 1.57829249), 2.80094,
               (H(1.2e8, "--"), E(3.997, "-+")), "13"),
            _R(1.40446782, (-0.8292488, 0.40020666, 1.63414222), 2.83390,
               (H(1.2e7, "--"), E(2.339, "+-")), "13"),
            _R(0.88549561, (-0.8205325, 0.48672003, 1.73026092), 2.91164,
               (H(3.6e5, "--"), E(0.115, "+-")), "13"),
            _R(0.88252640, (-0.8205461, 0.48707376, 1.73091656), 2.91232,
               (H(3.5e5, "--"), H(1.129, "++")), "12"),
            _R(0.43576483, (-0.8294764, 0.52748648, 1.83975303), 3.06355,
               (H(141.6, "--"), H(131.2, "++")), "12"),
            _R(0.43386473, (-0.8295307, 0.52761249, 1.84024288), 3.06444,
               (C(122.4, 55.9), C(0.006, 0.003)), "12"),
            _R(0.22999268, (-0.8332273, 0.53913361, 1.89139773), 3.17392,
               (H(20.9, "--"), H(15.4, "++")), "12"),
            _R(0.20401040, (-0.8328690, 0.54026355, 1.89729290), 3.18968,
               (H(43.6, "--"), H(1.520, "++")), "12"),
            _R(0.20249526, (-0.8328350, 0.54032603, 1.89762664), 3.19061,
               (H(44.0, "--"), E(0.214, "+-")), "13"),
            _R(0.11152813, (-0.8249182, 0.54279850, 1.91328664), 3.24487,
               (H(11.3, "--"), E(3.344, "-+")), "13"),
            _R(0.08678175, (-0.8155831, 0.54199640, 1.91242236), 3.25358,
               (H(3.145, "--"), E(6.083, "-+")), "13"),
            _R(0.08565633, (-0.8147361, 0.54187224, 1.91209109), 3.25352,
               (H(2.892, "--"), H(2.155, "--")), "14"),
            _R(0.07972055, (-0.8042760, 0.53994846, 1.90628191), 3.24622,
               (H(12.8, "--"), H(1.137, "--")), "14"),
            _R(0.07971735, (-0.8036473, 0.53981462, 1.90585881), 3.24548,
               (H(13.5, "--"), E(0.102, "+-")), "15"),
            _R(0.08410133, (-0.7923527, 0.53715604, 1.89739629), 3.22826,
               (H(26.1, "--"), E(0.437, "+-")), "15"),
            _R(0.10384393, (-0.7734998, 0.53189053, 1.88114272), 3.18785,
               (H(45.3, "--"), E(0.017, "+-")), "15"),
            _R(0.10434983, (-0.7731218, 0.53177615, 1.88080147), 3.18694,
               (H(45.6, "--"), H(1.076, "--")), "14"),
            _R(0.25355592, (-0.6969820, 0.50247205, 1.81080243), 2.95400,
               (H(81.6, "--"), H(2.475, "--")), "14"),
            _R(0.72782678, (-0.5332377, 0.37682055, 1.74535253), 2.31899,
               (H(1.665, "--"), H(1.168, "--")), "14"),
            _R(0.72851628, (-0.5330090, 0.37656118, 1.74545380), 2.31811,
               (H(1.663, "--"), E(0.180, "+-")), "15"),
            _R(0.81967081, (-0.5010493, 0.33859521, 1.76807813), 2.20165,
               (H(1.459, "--"), E(2.929, "+-")), "15"),
            _R(0.90032159, (-0.4660976, 0.29622781, 1.81248741), 2.09659,
               (H(1.287, "--"), E(4.314, "-+")), "15"),
            _R(0.96532951, (-0.4098555, 0.24007860, 1.92134252), 2.00456,
               (H(1.015, "--"), E(5.784, "-+")), "15"),
            _R(0.96533280, (-0.4096012, 0.23982448, 1.92201365), 2.00444,
               (E(6.278, "-+"), E(5.788, "-+")), "14"),
            _R(0.96242698, (-0.4048664, 0.23337318, 1.93769516), 2.00395,
               (E(6.223, "-+"), E(5.808, "-+")), "14"),
            _R(0.79109334, (-0.4660061, 0.10080160, 2.01121985), 2.10647,
               (E(6.282, "-+"), E(4.660, "-+")), "14"),
            _R(0.75549644, (-0.4810657, 0.01013828, 2.02365674), 2.13084,
               (E(6.283, "-+"), E(4.504, "-+")), "14"),
            _R(0.75514105, (-0.4812175, 0.0, 2.02378219), 2.13109,
               (D(), E(4.502, "-+")), "16>14", flags=("terminal",)),
        ),
    ),
)

TABLES["A.14"] = (
    RefBlock(
        table="A.14",
        family="5.8-orange",
        section="YOZ",
        columns=("gamma", "y", "z", "vx", "T/4"),
        signature=("YOZ", "OY"),
        arc_factor=1.0,
        arc_label="T/4",
        bd_after=(3,),
        notes=(
            "the first row prints the energy of the nearby curated sample"
            " instead of the branch point itself (the true branch point sits"
            " at -1.378748 where the 2-cover angle crosses pi)"
        ),
        rows=(
            _R(-1.3778408, (-1.9362212, 0.0, -1.552668), 6.84227,
               (H(1.188, "--"), D()), "17>19",
               flags=("host", "gamma-misprint")),
            _R(-1.3787982, (-1.9357491, 0.00699775, -1.553040), 6.84383,
               (H(1.182, "--"), E(6.283, "-+")), "17"),
            _R(-1.3813013, (-1.9306848, 0.05015015, -1.553814), 6.84540,
               (H(1.156, "--"), E(6.282, "-+")), "17"),
            _R(-1.3923324, (-1.9028470, 0.11526201, -1.558262), 6.85217,
               (H(1.011, "--"), E(6.280, "-+")), "17"),
            _R(-1.3923474, (-1.9021982, 0.11530898, -1.558377), 6.85218,
               (E(6.278, "-+"), E(6.281, "-+")), "16"),
            _R(-1.3815975, (-1.8931081, 0.05155514, -1.560452), 6.84586,
               (E(6.200, "-+"), E(6.283, "-+")), "16"),
            _R(-1.3789032, (-1.8922720, 0.00161344, -1.560714), 6.84426,
               (E(6.186, "-+"), E(6.283, "-+")), "16"),
            _R(-1.3789005, (-1.8922713, 0.0, -1.560715), 6.84426,
               (E(6.186, "-+"), D()), "16>18", flags=("terminal",)),
        ),
    ),
)
