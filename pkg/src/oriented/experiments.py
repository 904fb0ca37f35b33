"""Numerical experiments: apex sweep, circle/semidisk crossover, chord-inclination search.

Each experiment returns plain data (rows plus a summary dict) so the CLI can
write CSV/JSON and the tests can assert on it directly.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .errors import NoCrossover
from .geometry import Hull, convex_hull, min_enclosing_circle
from .oracle import HullFamily, OracleConfig, oracle_segment, random_hull
from .segment import Objective, lemma3_fits, smallest_segment
from .semidisk import smallest_semidisk

ONSET_TOL = 1e-6


# -- apex sweep ---------------------------------------------------------------------

LEMMA3_COLUMNS = ("apex_angle", "u_area", "u_perimeter", "r_area", "r_perimeter",
                  "theta_area", "theta_perimeter")


@dataclass
class SweepResult:
    rows: list[tuple[float, ...]]
    onset_area: float | None
    onset_perimeter: float | None
    max_gap: float
    max_gap_angle: float

    def summary(self) -> dict[str, Any]:
        return {"onset_area_deg": self.onset_area, "onset_perimeter_deg": self.onset_perimeter,
                "max_abs_u_diff": self.max_gap, "max_abs_u_diff_at_deg": self.max_gap_angle}


def lemma3_sweep(start_deg: float = 0.0, stop_deg: float = 80.0, step_deg: float = 0.25) -> SweepResult:
    """Move the apex of the base-(-1,0)-(1,0) triangle along the unit arc and track both chord midpoints.

    ``u`` is the chord midpoint's x-coordinate, so 0 means the segment is
    centered on the base. Onset is the first angle where ``|u|`` exceeds
    ``ONSET_TOL``.
    """
    if not 0.0 < step_deg < stop_deg - start_deg:
        raise ValueError("need 0 < step < range")
    count = int(math.floor((stop_deg - start_deg) / step_deg + 1e-9)) + 1
    rows = []
    for k in range(count):
        deg = start_deg + k * step_deg
        area, perim = lemma3_fits(math.radians(deg))
        a, p = area.container, perim.container
        rows.append((deg, a.chord_midpoint.x + 0.0, p.chord_midpoint.x + 0.0,
                     a.radius, p.radius, a.theta, p.theta))

    def onset(col: int) -> float | None:
        return next((r[0] for r in rows if abs(r[col]) > ONSET_TOL), None)

    gaps = [abs(r[1] - r[2]) for r in rows]
    k = int(np.argmax(gaps))
    return SweepResult(rows, onset(1), onset(2), gaps[k], rows[k][0])


# -- semidisk vs circle crossover ----------------------------------------------------

REMARK_VERTICES = 64


def remark_hull(lam: float) -> Hull:
    """Upper unit semicircle closed by a lower cap of height ``lam``.

    ``lam = 0`` is a half-disk, ``lam = 1`` the full circle; the smallest
    enclosing circle is the unit circle throughout.
    """
    upper = REMARK_VERTICES // 2 + 1
    lower = REMARK_VERTICES - upper
    a_up = math.pi * np.arange(upper) / (upper - 1)
    pts = [(math.cos(a), math.sin(a)) for a in a_up]
    if lam > 0.0:
        a_lo = math.pi + math.pi * np.arange(1, lower + 1) / (lower + 1)
        pts += [(math.cos(a), lam * math.sin(a)) for a in a_lo]
    return convex_hull(pts)


def _area_gap(lam: float) -> tuple[float, float, float]:
    hull = remark_hull(lam)
    semi = smallest_semidisk(hull).container.area
    circ = min_enclosing_circle(hull).area
    return semi, circ, semi - circ


@dataclass
class CrossoverResult:
    rows: list[tuple[float, float, float]]
    lam_star: float
    gap_at_star: float
    iterations: int


def remark_crossover(steps: int = 32, tol: float = 1e-12, max_iter: int = 200) -> CrossoverResult:
    """Sample the family at ``steps + 1`` values of lambda, then bisect for equal areas."""
    if steps < 8:
        raise ValueError("steps must be >= 8")
    rows = []
    for k in range(steps + 1):
        lam = k / steps
        semi, circ, _ = _area_gap(lam)
        rows.append((lam, semi, circ))
    g0, g1 = _area_gap(0.0)[2], _area_gap(1.0)[2]
    if not (g0 < 0.0 < g1):
        raise NoCrossover(f"semidisk minus circle area: {g0:.6g} at 0, {g1:.6g} at 1")
    lo, hi = 0.0, 1.0
    gap = g0
    it = 0
    for it in range(1, max_iter + 1):
        mid = (lo + hi) / 2.0
        gap = _area_gap(mid)[2]
        if gap < 0.0:
            lo = mid
        else:
            hi = mid
        if hi - lo <= tol or gap == 0.0:
            break
    lam = (lo + hi) / 2.0
    return CrossoverResult(rows, lam, _area_gap(lam)[2], it)


# -- do the two optimal chords ever tilt against each other? ----------------------------

@dataclass
class Q3Finding:
    samples: int
    seed: int
    max_angle: float
    witness: dict[str, Any] | None
    differing: list[dict[str, Any]] = field(default_factory=list)

    def to_dict(self) -> dict[str, Any]:
        return {"samples": self.samples, "seed": self.seed, "max_angle": self.max_angle,
                "witness": self.witness, "differing_edges": self.differing}


def chord_angle(n1, n2) -> float:
    """Angle between two chord lines, in ``[0, pi/2]``."""
    c = abs(n1.x * n2.x + n1.y * n2.y)
    return math.acos(min(c, 1.0))


def q3_search(samples: int, seed: int, oracle_cfg: OracleConfig = OracleConfig()) -> Q3Finding:
    """Random hulls where the area and perimeter optima use different edges.

    The largest inclination found is re-checked against ``oracle_segment``
    for both objectives; ``witness["verified"]`` records the outcome.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    rng = np.random.default_rng(seed)
    families = list(HullFamily)
    best: tuple[float, Hull, Any, Any] | None = None
    differing = []
    for k in range(samples):
        sub = int(rng.integers(2 ** 62))
        fam = families[k % len(families)]
        hull = random_hull(sub, int(rng.integers(3, 13)), fam)
        if hull.n < 3:
            continue
        sa = smallest_segment(hull, Objective.AREA)
        sp = smallest_segment(hull, Objective.PERIMETER)
        angle = chord_angle(sa.container.chord_normal, sp.container.chord_normal)
        if sa.edge_index != sp.edge_index:
            differing.append({"sample": k, "edge_area": sa.edge_index,
                              "edge_perimeter": sp.edge_index, "angle": angle})
        if angle > 1e-9 and (best is None or angle > best[0]):
            best = (angle, hull, sa, sp)

    if best is None:
        return Q3Finding(samples, seed, 0.0, None, differing)
    angle, hull, sa, sp = best
    oa = oracle_segment(hull, Objective.AREA, oracle_cfg)
    op = oracle_segment(hull, Objective.PERIMETER, oracle_cfg)
    # The oracle confirms the witness if it cannot beat either solver answer
    # and its own chords are inclined by about the same angle.
    ok_values = (oa.value >= sa.value * (1 - 1e-3) - oa.resolution_bound
                 and op.value >= sp.value * (1 - 1e-3) - op.resolution_bound)
    oracle_angle = chord_angle(oa.container.chord_normal, op.container.chord_normal)
    witness = {
        "points": [list(v) for v in hull.vertices],
        "angle": angle,
        "edge_area": sa.edge_index,
        "edge_perimeter": sp.edge_index,
        "value_area": sa.value,
        "value_perimeter": sp.value,
        "oracle_value_area": oa.value,
        "oracle_value_perimeter": op.value,
        "oracle_angle": oracle_angle,
        "verified": bool(ok_values and abs(oracle_angle - angle) <= 1e-2),
    }
    return Q3Finding(samples, seed, angle, witness, differing)
