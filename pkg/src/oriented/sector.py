"""Smallest containing sector, found by searching over apex positions.

Once the apex is fixed the best sector is forced: its half-angle covers the
angular spread of the hull seen from the apex and its radius reaches the
farthest vertex. Both objectives grow with the half-angle and with the
radius, so that sector is optimal for area and perimeter alike, and the
problem reduces to a 2-D search for the apex. The landscape has several
basins; results are the best of a fixed set of starts, not a certificate.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ApexInsideHull
from .geometry import Hull, Point, dist, edge_frames
from .report import SolveReport, ordered_map
from .search import compass, pattern_search
from .segment import Objective
from .semidisk import smallest_semidisk

ALPHA_FLOOR = 1e-6
ANGLE_TOL = 1e-9
SEARCH_TOL = 1e-10     # relative to the hull diameter
START_DISTANCES = (0.5, 1.0, 2.0, 4.0)
BOX_FACTOR = 8.0
POLISH_CYCLES = 20
VALLEY_TOL = 1e-7    # relative to the hull diameter


@dataclass(frozen=True)
class Sector:
    apex: Point
    radius: float
    axis: Point
    half_angle: float

    @property
    def area(self) -> float:
        return self.half_angle * self.radius ** 2

    @property
    def perimeter(self) -> float:
        return 2.0 * self.radius + 2.0 * self.half_angle * self.radius

    def value(self, obj: Objective) -> float:
        return self.area if Objective(obj) is Objective.AREA else self.perimeter

    @property
    def boundary_rays(self) -> tuple[Point, Point]:
        phi = math.atan2(self.axis.y, self.axis.x)
        return (Point(math.cos(phi - self.half_angle), math.sin(phi - self.half_angle)),
                Point(math.cos(phi + self.half_angle), math.sin(phi + self.half_angle)))


def sector_contains(sec: Sector, p) -> bool:
    d = dist(p, sec.apex)
    tol = 1e-9 * max(sec.radius, 1e-300)
    if d <= tol:
        return True
    if d > sec.radius + tol:
        return False
    c = ((p[0] - sec.apex.x) * sec.axis.x + (p[1] - sec.apex.y) * sec.axis.y) / d
    return math.acos(min(max(c, -1.0), 1.0)) <= sec.half_angle + ANGLE_TOL


def _strictly_inside(hull: Hull, p) -> bool:
    return hull.clearance(p) > 1e-12 * hull.diameter


def angular_span(hull: Hull, apex) -> tuple[float, float]:
    """``(start, extent)``: the smallest CCW angular interval holding every vertex seen from ``apex``."""
    rel = hull.array - np.asarray(apex, dtype=float)
    d = np.hypot(rel[:, 0], rel[:, 1])
    rel = rel[d > 1e-12 * max(hull.diameter, 1e-300)]
    if len(rel) == 0:
        return 0.0, 0.0
    ang = np.sort(np.arctan2(rel[:, 1], rel[:, 0]))
    gaps = np.diff(np.append(ang, ang[0] + 2 * math.pi))
    k = int(np.argmax(gaps))
    start = float(ang[(k + 1) % len(ang)])
    return start, float(2 * math.pi - gaps[k])


def fit_sector_given_apex(hull: Hull, apex) -> Sector:
    """The unique smallest sector with this apex that contains the hull."""
    apex = Point(float(apex[0]), float(apex[1]))
    if _strictly_inside(hull, apex):
        raise ApexInsideHull(f"apex {tuple(apex)} lies inside the hull")
    start, extent = angular_span(hull, apex)
    phi = start + extent / 2.0
    r = float(np.hypot(*(hull.array - apex).T).max())
    return Sector(apex, r, Point(math.cos(phi), math.sin(phi)), max(extent / 2.0, ALPHA_FLOOR))


def degenerate_sector(hull: Hull, obj: Objective) -> SolveReport:
    a = hull.vertices[0]
    if hull.n == 1:
        sec = Sector(a, 0.0, Point(1.0, 0.0), ALPHA_FLOOR)
    else:
        b = hull.vertices[1]
        d = dist(a, b)
        sec = Sector(a, d, Point((b.x - a.x) / d, (b.y - a.y) / d), ALPHA_FLOOR)
    return SolveReport(sec, obj.value, sec.value(obj), list(range(hull.n)), None, "alpha-floor",
                       tolerances={"alpha_floor": ALPHA_FLOOR}, degenerate=True,
                       notes={"reason": "collinear hull: area and perimeter approach a needle"})


def sector_starts(hull: Hull) -> list[tuple[Point, float]]:
    """Multistart points, each with the angle of its local search frame.

    Points pushed out from the centroid past each edge at several
    distances, the two ends of the smallest semidisk's diameter, and the
    hull vertices themselves (optimal apexes often sit exactly on one).
    """
    g = hull.centroid
    D = hull.diameter
    starts = []
    frames = edge_frames(hull)
    for f in frames:
        out = (-f.inward_normal.x, -f.inward_normal.y)
        ang = math.atan2(out[1], out[0])
        for k in START_DISTANCES:
            starts.append((Point(g.x + k * D * out[0], g.y + k * D * out[1]), ang))
    sd = smallest_semidisk(hull).container
    ang = math.atan2(-sd.inward_normal.y, -sd.inward_normal.x)
    starts.extend((p, ang) for p in sd.endpoints)
    for i, v in enumerate(hull.vertices):
        prev = frames[i - 1].inward_normal
        nxt = frames[i].inward_normal
        starts.append((v, math.atan2(-(prev.y + nxt.y), -(prev.x + nxt.x))))
    return starts


def apex_cost(hull: Hull, obj: Objective):
    """Objective of the best sector at each apex; ``inf`` inside the hull or outside the search box."""
    obj = Objective(obj)
    verts = [(v.x, v.y) for v in hull.vertices]
    planes = [(f.origin.x, f.origin.y, f.inward_normal.x, f.inward_normal.y) for f in edge_frames(hull)]
    D = hull.diameter
    margin = 1e-12 * D
    eps = 1e-12 * D
    xs = [v[0] for v in verts]
    ys = [v[1] for v in verts]
    cx, cy = (min(xs) + max(xs)) / 2, (min(ys) + max(ys)) / 2
    hx = (max(xs) - min(xs)) / 2 * BOX_FACTOR + margin
    hy = (max(ys) - min(ys)) / 2 * BOX_FACTOR + margin
    area = obj is Objective.AREA
    two_pi = 2 * math.pi

    def cost(p) -> float:
        px, py = p
        if abs(px - cx) > hx or abs(py - cy) > hy:
            return math.inf
        # exact test: any slack inside the hull is a region where the search
        # can trade feasibility for objective and drift along flat valleys
        if all((px - ox) * nx + (py - oy) * ny > 0.0 for ox, oy, nx, ny in planes):
            return math.inf
        r = 0.0
        angs = []
        for x, y in verts:
            d = math.hypot(x - px, y - py)
            if d > r:
                r = d
            if d > eps:
                angs.append(math.atan2(y - py, x - px))
        if len(angs) < 2:
            alpha = ALPHA_FLOOR
        else:
            angs.sort()
            gap = angs[0] + two_pi - angs[-1]
            for a0, a1 in zip(angs, angs[1:]):
                if a1 - a0 > gap:
                    gap = a1 - a0
            alpha = max((two_pi - gap) / 2, ALPHA_FLOOR)
        return alpha * r * r if area else 2 * r * (1 + alpha)

    return cost


def kink_lines(hull: Hull) -> list[tuple[Point, Point]]:
    """Lines ``(point, unit direction)`` on which the apex cost can have a crease.

    The half-angle changes its extreme vertex where the apex is collinear
    with two vertices, and the radius changes its farthest vertex on the
    perpendicular bisector of two vertices.
    """
    out = []
    v = hull.vertices
    for i in range(hull.n):
        for j in range(i + 1, hull.n):
            d = dist(v[i], v[j])
            ux, uy = (v[j].x - v[i].x) / d, (v[j].y - v[i].y) / d
            out.append((v[i], Point(ux, uy)))
            out.append((Point((v[i].x + v[j].x) / 2, (v[i].y + v[j].y) / 2), Point(-uy, ux)))
    return out


def _valley_polish(cost, p, v, lines, D: float, tol: float):
    """Slide along every crease line through ``p``; a compass search stalls in such valleys."""
    evals = 0
    for _ in range(POLISH_CYCLES):
        best = None
        for o, u in lines:
            s = (p[0] - o.x) * u.x + (p[1] - o.y) * u.y
            q = (o.x + s * u.x, o.y + s * u.y)
            if math.dist(p, q) > VALLEY_TOL * D:
                continue
            fq = cost(q)
            evals += 1
            q2, f2, e = pattern_search(cost, q, 1e-3 * D, tol, [tuple(u), (-u.x, -u.y)])
            evals += e
            if min(fq, f2) < v and (best is None or min(fq, f2) < best[1]):
                best = (q, fq) if fq <= f2 else (q2, f2)
        if best is None:
            break
        p, v = best
    return p, v, evals


def smallest_sector(hull: Hull, obj: Objective) -> SolveReport:
    """Best-found smallest sector containing ``hull`` under ``obj``.

    A compass search over the apex is run from each of the ``5 n + 2``
    starts in :func:`sector_starts`, in a frame attached to the start so
    the procedure commutes with rigid motions. The winner is then polished,
    alternating a fine compass search with 1-D searches along the crease
    lines of :func:`kink_lines` that pass through the current apex.
    """
    obj = Objective(obj)
    if hull.n < 3:
        return degenerate_sector(hull, obj)
    a = hull.array
    # Search in coordinates centred on the hull. Far from the origin the cost
    # carries |coordinate| * eps of rounding noise, which blurs flat minima.
    cx, cy = (float(v) for v in (a.min(axis=0) + a.max(axis=0)) / 2)
    local = Hull(tuple(Point(v.x - cx, v.y - cy) for v in hull.vertices))
    D = local.diameter
    tol = SEARCH_TOL * D
    cost = apex_cost(local, obj)

    def run(start):
        p0, ang = start
        return pattern_search(cost, p0, 0.25 * D, tol, compass(8, ang))

    starts = sector_starts(local)
    results = ordered_map(run, starts)
    best_i = min(range(len(results)), key=lambda i: (results[i][1], i))
    p, v, evals = results[best_i]
    total = sum(r[2] for r in results)
    dirs = compass(16, starts[best_i][1] + math.pi / 16)
    lines = kink_lines(local)
    for _ in range(POLISH_CYCLES):
        p2, v2, e2 = pattern_search(cost, p, 1e-3 * D, tol, dirs)
        total += e2
        p3, v3, e3 = _valley_polish(cost, p2, v2, lines, D, tol)
        total += e3
        if v3 >= v:
            break
        p, v = p3, v3
    sec = fit_sector_given_apex(hull, (p[0] + cx, p[1] + cy))
    support = [int(i) for i in np.nonzero(np.hypot(*(a - sec.apex).T) >= sec.radius * (1 - 1e-9))[0]]
    return SolveReport(
        sec, obj.value, sec.value(obj), support, None, "apex-search", total,
        tolerances={"apex_step": SEARCH_TOL, "alpha_floor": ALPHA_FLOOR},
        degenerate=sec.half_angle <= ALPHA_FLOOR,
        notes={"best_start": best_i, "starts": len(starts),
               "start_values": [r[1] for r in results], "label": "best found"},
    )
