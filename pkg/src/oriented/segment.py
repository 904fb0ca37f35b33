"""Smallest containing circular segments under the area and perimeter objectives.

A segment is a disk cut by a chord. The chord of an optimal segment runs
along a hull edge and the chord midpoint lies on that edge, so the main
search is per edge: place the circle center at ``(u, t)`` in the edge
frame, take the smallest radius that reaches every vertex, and minimize the
objective. For a fixed ``t`` the best ``u`` is an exact 1-D minimax
(:func:`oriented.search.envelope_minimax`), which leaves a 1-D search over
``t``. Negative ``t`` puts the center outside the hull's side and gives a
minor segment; positive ``t`` gives a major one.

When the smallest enclosing circle's center is interior to the hull a
second, cheaper construction is also tried: cut that circle along each
edge line.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import DegenerateHull, WrongCase
from .geometry import EdgeFrame, Hull, Point, convex_hull, dist, edge_frames, min_enclosing_circle
from .report import SolveReport, ordered_map
from .search import envelope_minimax, golden_section

SUPPORT_TOL = 1e-9
CLAIM_TOL = 1e-7
TIE_TOL = 1e-12
# t = D * tan(psi): the grid in psi reaches |t| ~ 1000 D, enough for very flat segments.
PSI_MAX = math.pi / 2 - 1e-3
PSI_GRID = 65
PSI_TOL = 1e-13
REFINE_MINIMA = 3


class Objective(str, Enum):
    AREA = "area"
    PERIMETER = "perimeter"


class Case(str, Enum):
    CASE1 = "case1"
    CASE2 = "case2"


def measures(radius: float, offset: float) -> tuple[float, float, float]:
    """``(theta, area, perimeter)`` of the segment with this radius and chord offset."""
    if radius <= 0.0:
        return math.pi, 0.0, 0.0
    theta = 2.0 * math.acos(min(max(offset / radius, -1.0), 1.0))
    area = radius * radius * (theta - math.sin(theta)) / 2.0
    perimeter = radius * theta + 2.0 * radius * math.sin(theta / 2.0)
    return theta, area, perimeter


def objective_value(radius: float, offset: float, obj: Objective) -> float:
    _, area, perimeter = measures(radius, offset)
    return area if obj is Objective.AREA else perimeter


@dataclass(frozen=True)
class CircularSegment:
    """Disk of ``radius`` about ``center`` intersected with the half-plane
    ``(p - center) . chord_normal >= chord_offset``."""

    center: Point
    radius: float
    chord_normal: Point
    chord_offset: float

    @property
    def theta(self) -> float:
        return measures(self.radius, self.chord_offset)[0]

    @property
    def area(self) -> float:
        return measures(self.radius, self.chord_offset)[1]

    @property
    def perimeter(self) -> float:
        return measures(self.radius, self.chord_offset)[2]

    @property
    def chord_midpoint(self) -> Point:
        c, n, h = self.center, self.chord_normal, self.chord_offset
        return Point(c.x + h * n.x, c.y + h * n.y)

    @property
    def half_chord(self) -> float:
        r, h = self.radius, self.chord_offset
        return math.sqrt(max((r - h) * (r + h), 0.0))


def segment_measures(seg: CircularSegment) -> tuple[float, float, float]:
    return measures(seg.radius, seg.chord_offset)


def segment_contains(seg: CircularSegment, p) -> bool:
    tol = SUPPORT_TOL * seg.radius
    m = seg.chord_midpoint
    n = seg.chord_normal
    return (dist(p, seg.center) <= seg.radius + tol
            and (p[0] - m.x) * n.x + (p[1] - m.y) * n.y >= -tol)


def classify_case(hull: Hull) -> Case:
    """CASE1 iff the smallest enclosing circle's center is strictly inside the hull."""
    if hull.n < 3:
        raise DegenerateHull(f"case classification needs n >= 3, got {hull.n}")
    c = min_enclosing_circle(hull).center
    return Case.CASE1 if hull.clearance(c) > 1e-9 * hull.diameter else Case.CASE2


def claim_holds(seg: CircularSegment, hull: Hull, tol: float = CLAIM_TOL) -> bool:
    """The chord lies along a hull edge and its midpoint is on that edge."""
    if hull.n < 2:
        return True
    scale = tol * max(hull.diameter, seg.radius)
    m = seg.chord_midpoint
    n = seg.chord_normal
    v = hull.vertices
    pairs = [(0, 1)] if hull.n == 2 else [(i, (i + 1) % hull.n) for i in range(hull.n)]
    for ia, ib in pairs:
        a, b = v[ia], v[ib]
        off_a = (a.x - m.x) * n.x + (a.y - m.y) * n.y
        off_b = (b.x - m.x) * n.x + (b.y - m.y) * n.y
        if abs(off_a) > scale or abs(off_b) > scale:
            continue
        ex, ey = b.x - a.x, b.y - a.y
        s = ((m.x - a.x) * ex + (m.y - a.y) * ey) / (ex * ex + ey * ey)
        if -tol <= s <= 1.0 + tol:
            return True
    return False


def _support(hull: Hull, seg: CircularSegment) -> list[int]:
    d = np.hypot(*(hull.array - seg.center).T)
    return [int(i) for i in np.nonzero(d >= seg.radius * (1.0 - SUPPORT_TOL))[0]]


def _edge_search(hull: Hull, frame: EdgeFrame, obj: Objective, constrain: bool):
    """Best ``(value, u, t, radius, evaluations)`` for one edge."""
    u, t = frame.local(hull.array)
    us, ts = u.tolist(), t.tolist()
    lo, hi = (0.0, frame.length) if constrain else (-math.inf, math.inf)
    scale = hull.diameter
    evals = 0

    def profile(tc: float) -> tuple[float, float]:
        x, val = envelope_minimax(us, [(tc - tk) ** 2 for tk in ts], lo, hi)
        return x, math.sqrt(val)

    def f(psi: float) -> float:
        nonlocal evals
        evals += 1
        tc = scale * math.tan(psi)
        return objective_value(profile(tc)[1], -tc, obj)

    psis = np.linspace(-PSI_MAX, PSI_MAX, PSI_GRID)
    psis[PSI_GRID // 2] = 0.0
    vals = [f(p) for p in psis]
    last = PSI_GRID - 1
    minima = [k for k in range(PSI_GRID)
              if (k == 0 or vals[k] <= vals[k - 1]) and (k == last or vals[k] <= vals[k + 1])]
    minima.sort(key=lambda k: vals[k])
    best_v = min(vals)
    best_psi = float(psis[vals.index(best_v)])
    for k in minima[:REFINE_MINIMA]:
        psi, v, _ = golden_section(f, float(psis[max(k - 1, 0)]), float(psis[min(k + 1, last)]), PSI_TOL)
        if v < best_v:
            best_psi, best_v = psi, v
    tc = scale * math.tan(best_psi)
    x, r = profile(tc)
    at_limit = abs(best_psi) >= PSI_MAX
    return objective_value(r, -tc, obj), x, tc, r, evals, at_limit


def _diametral_segment(hull: Hull, frame: EdgeFrame, obj: Objective) -> SolveReport:
    seg = CircularSegment(frame.to_world(frame.length / 2.0, 0.0), frame.length / 2.0,
                          frame.inward_normal, 0.0)
    return SolveReport(seg, obj.value, objective_value(seg.radius, 0.0, obj), [0, 1],
                       frame.index, "diametral", degenerate=True,
                       notes={"reason": "collinear hull: the infimum is a zero-width sliver"})


def case2_segment_on_edge(hull: Hull, frame: EdgeFrame, obj: Objective,
                          constrain_midpoint: bool = True) -> SolveReport:
    """Best segment whose chord lies on ``frame``'s edge line.

    With ``constrain_midpoint`` the chord midpoint is kept on the edge
    itself; otherwise anywhere on the line.
    """
    obj = Objective(obj)
    if hull.n < 3:
        return _diametral_segment(hull, frame, obj)
    value, x, tc, r, evals, at_limit = _edge_search(hull, frame, obj, constrain_midpoint)
    seg = CircularSegment(frame.to_world(x, tc), r, frame.inward_normal, -tc + 0.0)
    d = frame.length
    active = constrain_midpoint and (x <= 1e-12 * d or x >= d * (1.0 - 1e-12))
    return SolveReport(
        seg, obj.value, value, _support(hull, seg), frame.index, "case2-edge", evals,
        tolerances={"psi": PSI_TOL, "support": SUPPORT_TOL},
        notes={"midpoint_u": x, "center_t": tc, "midpoint_constraint_active": active,
               "search_limit_hit": at_limit},
    )


def case1_segment(hull: Hull, obj: Objective) -> SolveReport:
    """Cut the smallest enclosing circle along the best hull edge line."""
    obj = Objective(obj)
    if hull.n < 3 or classify_case(hull) is not Case.CASE1:
        raise WrongCase("case-1 construction needs the circle center inside the hull")
    circle = min_enclosing_circle(hull)
    best = None
    values = []
    for f in edge_frames(hull):
        (uc,), (tc,) = f.local(np.array([circle.center]))
        v = objective_value(circle.radius, -tc, obj)
        values.append(v)
        if best is None or v < best[0] * (1.0 - TIE_TOL):
            best = (v, f, float(uc), float(tc))
    v, f, uc, tc = best
    seg = CircularSegment(circle.center, circle.radius, f.inward_normal, -tc + 0.0)
    midpoint_ok = -CLAIM_TOL * f.length <= uc <= f.length * (1.0 + CLAIM_TOL)
    return SolveReport(seg, obj.value, v, _support(hull, seg), f.index, "case1",
                       tolerances={"support": SUPPORT_TOL},
                       notes={"candidate_values": values, "midpoint_on_edge": midpoint_ok})


def smallest_segment(hull: Hull, obj: Objective) -> SolveReport:
    """Smallest segment containing ``hull`` under ``obj``.

    Runs the per-edge search on every edge and, for Case-1 hulls, the
    circle-cutting construction as well, and returns the overall best.
    """
    obj = Objective(obj)
    if hull.n == 1:
        seg = CircularSegment(hull.vertices[0], 0.0, Point(0.0, 1.0), 0.0)
        return SolveReport(seg, obj.value, 0.0, [0], None, "point", degenerate=True)
    frames = edge_frames(hull)
    if hull.n == 2:
        return _diametral_segment(hull, frames[0], obj)

    per_edge = ordered_map(lambda f: case2_segment_on_edge(hull, f, obj), frames)
    case = classify_case(hull)
    candidates = list(per_edge)
    if case is Case.CASE1:
        candidates.append(case1_segment(hull, obj))
    best = candidates[0]
    for rep in candidates[1:]:
        if rep.value < best.value * (1.0 - TIE_TOL):
            best = rep

    # Midpoint constraint bound on some edge: see whether letting the midpoint
    # slide off the edge would have done better anywhere.
    unconstrained = None
    for rep in per_edge:
        if rep.notes["midpoint_constraint_active"]:
            free = case2_segment_on_edge(hull, frames[rep.edge_index], obj, constrain_midpoint=False)
            if unconstrained is None or free.value < unconstrained.value:
                unconstrained = free

    notes = {
        "case": case.value,
        "edge_values": [r.value for r in per_edge],
        "claim_holds": claim_holds(best.container, hull),
        "theta": best.container.theta,
    }
    if case is Case.CASE1:
        notes["case1_value"] = candidates[-1].value
    if unconstrained is not None:
        notes["unconstrained_value"] = unconstrained.value
        notes["unconstrained_edge"] = unconstrained.edge_index
        notes["claim_counterexample"] = unconstrained.value < best.value * (1.0 - 1e-9)
    return SolveReport(best.container, obj.value, best.value, best.support, best.edge_index,
                       best.construction, sum(r.iterations for r in per_edge),
                       tolerances={"psi": PSI_TOL, "support": SUPPORT_TOL, "claim": CLAIM_TOL},
                       notes=notes)


# -- the apex-motion family used to separate the two optima ------------------

def lemma3_hull(apex_angle: float) -> Hull:
    """Right triangle on the base (-1,0)-(1,0) with its apex ``apex_angle`` radians along the unit arc."""
    return convex_hull([(-1.0, 0.0), (1.0, 0.0), (math.sin(apex_angle), math.cos(apex_angle))])


def _base_frame(hull: Hull) -> EdgeFrame:
    for f in edge_frames(hull):
        if f.origin == (-1.0, 0.0):
            return f
    raise DegenerateHull("base edge not found")


def lemma3_fits(apex_angle: float) -> tuple[SolveReport, SolveReport]:
    """Base-edge area and perimeter optima for the apex at ``apex_angle``."""
    hull = lemma3_hull(apex_angle)
    f = _base_frame(hull)
    return (case2_segment_on_edge(hull, f, Objective.AREA),
            case2_segment_on_edge(hull, f, Objective.PERIMETER))


def lemma3_midpoint_separation(apex_angle: float) -> tuple[float, float]:
    """x-coordinates of the chord midpoints of the base-edge area and perimeter optima."""
    area, perim = lemma3_fits(apex_angle)
    return area.container.chord_midpoint.x, perim.container.chord_midpoint.x
