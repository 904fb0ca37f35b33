"""Planar primitives: points, convex hulls, edge frames, the smallest enclosing circle.

Every solver in the package consumes a :class:`Hull`. Containing the hull
is the same as containing the original point set, so points are reduced to
their strictly convex CCW hull once, up front.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .errors import DegeneratePoint, EmptyInput, InvalidInput

# Orientation tolerance, relative to the squared bounding-box diagonal.
ORIENT_EPS = 1e-12


class Point(NamedTuple):
    x: float
    y: float


def as_point(p: Sequence[float]) -> Point:
    try:
        x, y = float(p[0]), float(p[1])
    except (TypeError, ValueError, IndexError) as exc:
        raise InvalidInput(f"not a 2-D point: {p!r}") from exc
    if not (math.isfinite(x) and math.isfinite(y)):
        raise InvalidInput(f"non-finite coordinate in {p!r}")
    return Point(x, y)


def cross(o, a, b) -> float:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def dist(p, q) -> float:
    return math.hypot(p[0] - q[0], p[1] - q[1])


def unit(angle: float) -> Point:
    return Point(math.cos(angle), math.sin(angle))


@dataclass(frozen=True)
class Circle:
    center: Point
    radius: float

    @property
    def area(self) -> float:
        return math.pi * self.radius ** 2

    @property
    def perimeter(self) -> float:
        return 2.0 * math.pi * self.radius

    def contains(self, p, rel_tol: float = 1e-9) -> bool:
        return dist(self.center, p) <= self.radius * (1.0 + rel_tol)


@dataclass(frozen=True)
class Hull:
    """Strictly convex polygon, vertices in CCW order.

    ``n == 1`` is a single point and ``n == 2`` a segment; both are accepted
    by every solver. Build one with :func:`convex_hull` rather than by hand.
    """

    vertices: tuple[Point, ...]

    @property
    def n(self) -> int:
        return len(self.vertices)

    @cached_property
    def array(self) -> np.ndarray:
        return np.array(self.vertices, dtype=float).reshape(-1, 2)

    @cached_property
    def bbox_diagonal(self) -> float:
        a = self.array
        return float(np.hypot(*(a.max(axis=0) - a.min(axis=0))))

    @cached_property
    def diameter(self) -> float:
        """Largest vertex-to-vertex distance (rotating calipers over antipodal pairs)."""
        n = self.n
        if n < 2:
            return 0.0
        if n == 2:
            return dist(*self.vertices)
        v = self.vertices
        best = 0.0
        j = 1
        for i in range(n):
            a, b = v[i], v[(i + 1) % n]
            while abs(cross(a, b, v[(j + 1) % n])) > abs(cross(a, b, v[j])):
                j = (j + 1) % n
            best = max(best, dist(a, v[j]), dist(b, v[j]))
        return best

    @cached_property
    def centroid(self) -> Point:
        if self.n < 3:
            x, y = self.array.mean(axis=0)
            return Point(float(x), float(y))
        a = self.array
        x0, y0 = a[:, 0], a[:, 1]
        x1, y1 = np.roll(x0, -1), np.roll(y0, -1)
        c = x0 * y1 - x1 * y0
        area = c.sum() / 2.0
        return Point(float(((x0 + x1) * c).sum() / (6 * area)),
                     float(((y0 + y1) * c).sum() / (6 * area)))

    @cached_property
    def _half_planes(self) -> tuple[np.ndarray, np.ndarray]:
        a = self.array
        e = np.roll(a, -1, axis=0) - a
        e /= np.hypot(e[:, 0], e[:, 1])[:, None]
        return a, np.column_stack([-e[:, 1], e[:, 0]])

    def clearance(self, p) -> float:
        """Smallest signed distance from ``p`` to an edge line, positive inside.

        Hulls with fewer than three vertices have no interior: ``-inf``.
        """
        if self.n < 3:
            return -math.inf
        origins, normals = self._half_planes
        return float((((np.asarray(p, dtype=float) - origins) * normals).sum(axis=1)).min())

    def transformed(self, fn) -> "Hull":
        """Hull of the images of the vertices under ``fn``."""
        return convex_hull([fn(p) for p in self.vertices])


def convex_hull(points: Iterable[Sequence[float]]) -> Hull:
    """Monotone-chain hull; interior, duplicate and collinear boundary points are dropped."""
    pts = sorted({as_point(p) for p in points})
    if not pts:
        raise EmptyInput("convex hull of zero points")
    if len(pts) == 1:
        return Hull((pts[0],))
    xs = [p.x for p in pts]
    ys = [p.y for p in pts]
    eps = ORIENT_EPS * ((max(xs) - min(xs)) ** 2 + (max(ys) - min(ys)) ** 2)

    def chain(seq):
        out: list[Point] = []
        for p in seq:
            while len(out) >= 2 and cross(out[-2], out[-1], p) <= eps:
                out.pop()
            out.append(p)
        return out

    lower = chain(pts)
    upper = chain(reversed(pts))
    verts = lower[:-1] + upper[:-1]
    if len(verts) < 2:
        # all points collinear and the chains collapsed onto the two extremes
        verts = [pts[0], pts[-1]]
    return Hull(tuple(verts))


@dataclass(frozen=True)
class EdgeFrame:
    """Local frame of one hull edge.

    ``u`` runs from ``origin`` (vertex A) toward vertex B, ``t`` along the
    inward normal; every hull vertex has ``t >= 0``.
    """

    index: int
    origin: Point
    direction: Point
    inward_normal: Point
    length: float

    @property
    def end(self) -> Point:
        return Point(self.origin.x + self.length * self.direction.x,
                     self.origin.y + self.length * self.direction.y)

    def local(self, pts: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        rel = np.asarray(pts, dtype=float) - self.origin
        return rel @ np.asarray(self.direction), rel @ np.asarray(self.inward_normal)

    def to_world(self, u: float, t: float) -> Point:
        return Point(self.origin.x + u * self.direction.x + t * self.inward_normal.x,
                     self.origin.y + u * self.direction.y + t * self.inward_normal.y)


def _frame(index: int, a: Point, b: Point) -> EdgeFrame:
    d = dist(a, b)
    e = Point((b.x - a.x) / d, (b.y - a.y) / d)
    return EdgeFrame(index, a, e, Point(-e.y + 0.0, e.x + 0.0), d)


def edge_frames(hull: Hull) -> list[EdgeFrame]:
    """One frame per edge in CCW order; a 2-vertex hull yields both orientations of its segment."""
    v = hull.vertices
    if hull.n < 2:
        raise DegeneratePoint("a single-point hull has no edges")
    if hull.n == 2:
        return [_frame(0, v[0], v[1]), _frame(1, v[1], v[0])]
    return [_frame(i, v[i], v[(i + 1) % hull.n]) for i in range(hull.n)]


def farthest_vertex(hull: Hull, p: Sequence[float]) -> tuple[int, float]:
    """Index and distance of the vertex farthest from ``p``; the smallest index wins ties."""
    best_i, best_d = 0, -1.0
    for i, v in enumerate(hull.vertices):
        d = dist(v, p)
        if d > best_d:
            best_i, best_d = i, d
    return best_i, best_d


def signed_edge_distances(hull: Hull, p: Sequence[float]) -> np.ndarray:
    """Signed distance of ``p`` from every edge line, positive on the hull side."""
    return np.array([f.local(np.array([p]))[1][0] for f in edge_frames(hull)])


# -- smallest enclosing circle (randomized incremental, fixed shuffle seed) --

_MEC_SLACK = 1e-12


def _in_circle(c: tuple[float, float, float], p) -> bool:
    return math.hypot(p[0] - c[0], p[1] - c[1]) <= c[2] * (1.0 + _MEC_SLACK)


def _diametral(a, b) -> tuple[float, float, float]:
    cx, cy = (a[0] + b[0]) / 2.0, (a[1] + b[1]) / 2.0
    return cx, cy, max(math.hypot(cx - a[0], cy - a[1]), math.hypot(cx - b[0], cy - b[1]))


def circumcircle(a, b, c) -> tuple[float, float, float] | None:
    ox = (min(a[0], b[0], c[0]) + max(a[0], b[0], c[0])) / 2.0
    oy = (min(a[1], b[1], c[1]) + max(a[1], b[1], c[1])) / 2.0
    ax, ay = a[0] - ox, a[1] - oy
    bx, by = b[0] - ox, b[1] - oy
    cx, cy = c[0] - ox, c[1] - oy
    d = (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by)) * 2.0
    if d == 0.0:
        return None
    x = ox + ((ax * ax + ay * ay) * (by - cy) + (bx * bx + by * by) * (cy - ay)
              + (cx * cx + cy * cy) * (ay - by)) / d
    y = oy + ((ax * ax + ay * ay) * (cx - bx) + (bx * bx + by * by) * (ax - cx)
              + (cx * cx + cy * cy) * (bx - ax)) / d
    r = max(math.hypot(x - p[0], y - p[1]) for p in (a, b, c))
    return x, y, r


def _circle_two(pts, p, q):
    circ = _diametral(p, q)
    left = right = None
    for r in pts:
        if _in_circle(circ, r):
            continue
        side = cross(p, q, r)
        c = circumcircle(p, q, r)
        if c is None:
            continue
        if side > 0.0 and (left is None or cross(p, q, c[:2]) > cross(p, q, left[:2])):
            left = c
        elif side < 0.0 and (right is None or cross(p, q, c[:2]) < cross(p, q, right[:2])):
            right = c
    if left is None and right is None:
        return circ
    if left is None:
        return right
    if right is None:
        return left
    return left if left[2] <= right[2] else right


def _circle_one(pts, p):
    c = (p[0], p[1], 0.0)
    for i, q in enumerate(pts):
        if not _in_circle(c, q):
            c = _diametral(p, q) if c[2] == 0.0 else _circle_two(pts[: i + 1], p, q)
    return c


def min_enclosing_circle(hull: Hull) -> Circle:
    """Smallest circle containing every hull vertex.

    Expected linear time. The shuffle uses a private, fixed-seed generator so
    the function stays pure and deterministic.
    """
    pts = list(hull.vertices)
    if not pts:
        raise EmptyInput("no points")
    random.Random(0x5EED).shuffle(pts)
    c = None
    for i, p in enumerate(pts):
        if c is None or not _in_circle(c, p):
            c = _circle_one(pts[: i + 1], p)
    return Circle(Point(c[0], c[1]), c[2])


def circle_support(hull: Hull, circle: Circle, rel_tol: float = 1e-9) -> list[int]:
    d = np.hypot(*(hull.array - circle.center).T)
    return [int(i) for i in np.nonzero(d >= circle.radius * (1.0 - rel_tol))[0]]
