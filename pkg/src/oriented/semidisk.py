"""Smallest enclosing semidisk.

The diameter of an optimal semidisk lies along a hull edge and its midpoint
sits on that edge. So for each edge we find the point of the edge that
minimizes the largest distance to the hull (the minimum of the upper
envelope of the per-vertex distance curves) and keep the best edge.

Two solvers are provided. :func:`smallest_semidisk` treats every edge
independently with a golden-section search on the envelope.
:func:`smallest_semidisk_calipers` walks the edges in CCW order while a
rotating-calipers pointer tracks the vertex farthest from the current
edge's line, and uses that vertex plus the previous edge's support to
solve most edges from a handful of vertices.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import NotAContainer, TooFewVertices
from .geometry import EdgeFrame, Hull, Point, cross, dist, edge_frames
from .report import SolveReport, ordered_map
from .search import envelope_minimax, golden_section

GOLDEN_TOL = 1e-12     # x-tolerance, relative to the edge length
SUPPORT_TOL = 1e-9     # relative to the radius
LEMMA_TOL = 1e-7       # relative to the radius
TIE_TOL = 1e-12        # edge ties, relative to the hull diameter


@dataclass(frozen=True)
class Semidisk:
    center: Point
    radius: float
    inward_normal: Point

    @property
    def direction(self) -> Point:
        """Unit vector along the diameter."""
        return Point(self.inward_normal.y, -self.inward_normal.x)

    @property
    def area(self) -> float:
        return math.pi * self.radius ** 2 / 2.0

    @property
    def perimeter(self) -> float:
        return (math.pi + 2.0) * self.radius

    @property
    def endpoints(self) -> tuple[Point, Point]:
        c, e, r = self.center, self.direction, self.radius
        return Point(c.x - r * e.x, c.y - r * e.y), Point(c.x + r * e.x, c.y + r * e.y)


@dataclass(frozen=True)
class EdgeMinimax:
    edge_index: int
    x_star: float
    radius: float
    support: tuple[int, ...]


@dataclass
class CalipersTrace:
    """Per-edge index of the vertex farthest from the edge's supporting line."""

    indices: list[int]
    reversals: list[int] = field(default_factory=list)
    pruned: list[int] = field(default_factory=list)

    def is_non_reversing(self) -> bool:
        # Cyclic steps of a monotone walk add up to exactly one lap.
        n = len(self.indices)
        if n == 0:
            return True
        steps = [(self.indices[(i + 1) % n] - self.indices[i]) % n for i in range(n)]
        lap = sum(steps)
        return lap == n or (lap == 0 and len(set(self.indices)) == 1)


def contains(sd: Semidisk, p) -> bool:
    tol = SUPPORT_TOL * sd.radius
    rx, ry = p[0] - sd.center.x, p[1] - sd.center.y
    return (math.hypot(rx, ry) <= sd.radius + tol
            and rx * sd.inward_normal.x + ry * sd.inward_normal.y >= -tol)


def semidisk_on_edge(frame: EdgeFrame, em: EdgeMinimax) -> Semidisk:
    return Semidisk(frame.to_world(em.x_star, 0.0), em.radius, frame.inward_normal)


def _support(d2: np.ndarray, r: float) -> tuple[int, ...]:
    return tuple(int(i) for i in np.nonzero(np.sqrt(d2) >= r * (1.0 - SUPPORT_TOL))[0])


def minimax_on_edge(hull: Hull, frame: EdgeFrame) -> EdgeMinimax:
    """Point of ``frame``'s edge at least maximum distance from all hull vertices.

    The envelope ``g(x) = max_V |P(x) - V|`` (endpoints included) is convex,
    so a golden-section search brackets the minimum; a final exact step
    re-solves it from the few vertices that are active there.
    """
    u, t = frame.local(hull.array)
    t2 = t * t
    d = frame.length

    def g2(x: float) -> float:
        return float(((x - u) ** 2 + t2).max())

    x_g, _, _ = golden_section(g2, 0.0, d, GOLDEN_TOL * d)

    d2 = (x_g - u) ** 2 + t2
    order = np.argsort(-d2, kind="stable")[:12]
    active = [int(k) for k in order if d2[k] >= d2[order[0]] * (1.0 - 1e-6)]
    cands = [x_g, 0.0, d]
    cands += [min(max(float(u[k]), 0.0), d) for k in active]
    for i, a in enumerate(active):
        for b in active[i + 1:]:
            if u[a] != u[b]:
                x = (u[a] ** 2 + t2[a] - u[b] ** 2 - t2[b]) / (2.0 * (u[a] - u[b]))
                if 0.0 <= x <= d:
                    cands.append(float(x))
    best_x, best_v = x_g, g2(x_g)
    for x in cands[1:]:
        v = g2(x)
        if v < best_v:
            best_x, best_v = x, v
    r = math.sqrt(best_v)
    return EdgeMinimax(frame.index, best_x, r, _support((best_x - u) ** 2 + t2, r))


def _point_report(hull: Hull) -> SolveReport:
    sd = Semidisk(hull.vertices[0], 0.0, Point(0.0, 1.0))
    return SolveReport(sd, "radius", 0.0, [0], None, "point", degenerate=True)


def smallest_semidisk(hull: Hull) -> SolveReport:
    """Minimal-radius semidisk containing ``hull``, by exhaustive per-edge search."""
    if hull.n == 1:
        return _point_report(hull)
    frames = edge_frames(hull)
    per_edge = ordered_map(lambda f: minimax_on_edge(hull, f), frames)
    tie = TIE_TOL * hull.diameter
    best = per_edge[0]
    for em in per_edge[1:]:
        if em.radius < best.radius - tie:
            best = em
    sd = semidisk_on_edge(frames[best.edge_index], best)
    return SolveReport(
        sd, "radius", best.radius, list(best.support), best.edge_index, "naive",
        tolerances={"golden_x": GOLDEN_TOL, "support": SUPPORT_TOL, "tie": TIE_TOL},
        notes={"edge_radii": [em.radius for em in per_edge]},
    )


def smallest_semidisk_calipers(hull: Hull) -> SolveReport:
    """Same optimum as :func:`smallest_semidisk`, visiting far fewer vertices.

    For each edge the minimax is first solved on a seed subset (the edge's
    endpoints, the calipers vertex, the previous edge's support). The
    subset optimum is a lower bound for the edge: if it cannot beat the
    best edge so far the edge is skipped, otherwise one full pass over the
    hull either confirms it or adds the violating vertex and repeats.

    The calipers pointer only ever advances. A local check flags any edge
    where the farthest vertex lies behind the pointer; such an edge falls
    back to a full scan and is listed in ``trace.reversals``.
    """
    n = hull.n
    if n < 3:
        raise TooFewVertices(f"calipers variant needs n >= 3, got {n}")
    pts = hull.array
    v = hull.vertices
    frames = edge_frames(hull)
    tie = TIE_TOL * hull.diameter
    h_tol = 1e-12 * hull.diameter

    def height(f: EdgeFrame, k: int) -> float:
        return cross(f.origin, f.end, v[k % n]) / f.length

    f0 = frames[0]
    hs = [height(f0, k) for k in range(n)]
    j = max(range(n), key=lambda k: (hs[k], -k))
    trace = CalipersTrace([])
    best: EdgeMinimax | None = None
    seed_support: tuple[int, ...] = ()
    visits = 0
    for f in frames:
        i = f.index
        if i > 0:
            for _ in range(n):
                if height(f, j + 1) > height(f, j) + h_tol:
                    j = (j + 1) % n
                else:
                    break
            visits += 2
            if height(f, j - 1) > height(f, j) + h_tol:
                trace.reversals.append(i)
                hs = [height(f, k) for k in range(n)]
                j = max(range(n), key=lambda k: (hs[k], -k))
                visits += n
        trace.indices.append(j)

        if i in trace.reversals:
            em = minimax_on_edge(hull, f)
            visits += n
        else:
            u, t = f.local(pts)
            t2 = t * t
            subset = sorted({i, (i + 1) % n, j, *seed_support})
            em = None
            for _ in range(n):
                visits += len(subset)
                x, val = envelope_minimax(u[subset].tolist(), t2[subset].tolist(), 0.0, f.length)
                r_lb = math.sqrt(val)
                if best is not None and r_lb >= best.radius - tie:
                    trace.pruned.append(i)
                    break
                d2 = (x - u) ** 2 + t2
                visits += n
                k = int(np.argmax(d2))
                if d2[k] <= val * (1.0 + 1e-12) or k in subset:
                    r = math.sqrt(float(d2[k]))
                    em = EdgeMinimax(i, x, r, _support(d2, r))
                    break
                subset.append(k)
        if em is None:
            continue
        seed_support = em.support
        if best is None or em.radius < best.radius - tie:
            best = em

    assert best is not None
    sd = semidisk_on_edge(frames[best.edge_index], best)
    return SolveReport(
        sd, "radius", best.radius, list(best.support), best.edge_index, "calipers",
        tolerances={"support": SUPPORT_TOL, "tie": TIE_TOL},
        notes={"vertex_visits": visits, "non_reversing": trace.is_non_reversing()},
        trace=trace,
    )


def _check_container(sd: Semidisk, hull: Hull) -> None:
    bad = [i for i, p in enumerate(hull.vertices) if not contains(sd, p)]
    if bad:
        raise NotAContainer(f"semidisk misses hull vertices {bad}")


def check_lemma1(sd: Semidisk, hull: Hull) -> bool:
    """Some hull vertex lies on the diameter of ``sd``."""
    _check_container(sd, hull)
    a, b = sd.endpoints
    tol = LEMMA_TOL * sd.radius
    return any(_seg_dist(p, a, b) <= tol for p in hull.vertices)


def check_lemma2(sd: Semidisk, hull: Hull) -> bool:
    """The diameter's midpoint is a hull vertex, or it lies on the one hull edge along the diameter."""
    _check_container(sd, hull)
    tol = LEMMA_TOL * sd.radius
    if any(dist(p, sd.center) <= tol for p in hull.vertices):
        return True
    n = hull.n
    edges = [] if n < 2 else [(0, 1)] if n == 2 else [(i, (i + 1) % n) for i in range(n)]
    e, nrm = sd.direction, sd.inward_normal
    on_line = []
    for ia, ib in edges:
        a, b = hull.vertices[ia], hull.vertices[ib]
        ex, ey = (b.x - a.x) / dist(a, b), (b.y - a.y) / dist(a, b)
        if abs(ex * e.y - ey * e.x) > LEMMA_TOL:
            continue
        off = (a.x - sd.center.x) * nrm.x + (a.y - sd.center.y) * nrm.y
        if abs(off) <= tol:
            on_line.append((a, b))
    return len(on_line) == 1 and _seg_dist(sd.center, *on_line[0]) <= tol


def _seg_dist(p, a, b) -> float:
    ax, ay = b[0] - a[0], b[1] - a[1]
    L2 = ax * ax + ay * ay
    if L2 == 0.0:
        return dist(p, a)
    s = min(max(((p[0] - a[0]) * ax + (p[1] - a[1]) * ay) / L2, 0.0), 1.0)
    return math.hypot(p[0] - a[0] - s * ax, p[1] - a[1] - s * ay)
