"""Deterministic SVG figures: a hull with its containers, and line plots for sweeps."""
from __future__ import annotations

import math
from typing import Iterable, Sequence

from .geometry import Circle, Hull, Point
from .report import SolveReport
from .sector import Sector
from .segment import CircularSegment
from .semidisk import Semidisk

SIZE = 800
MARGIN = 0.05
COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd")


def _f(v: float) -> str:
    return f"{v:.3f}"


class _Canvas:
    """World-to-screen map: uniform scale, 5% margin, y pointing up."""

    def __init__(self, pts: Sequence[tuple[float, float]]):
        xs = [p[0] for p in pts]
        ys = [p[1] for p in pts]
        self.x0, self.y0 = min(xs), min(ys)
        w, h = max(xs) - self.x0, max(ys) - self.y0
        span = max(w, h) or 1.0
        inner = SIZE * (1 - 2 * MARGIN)
        self.k = inner / span
        self.ox = SIZE * MARGIN + (inner - w * self.k) / 2
        self.oy = SIZE * MARGIN + (inner - h * self.k) / 2

    def xy(self, p) -> tuple[float, float]:
        return self.ox + (p[0] - self.x0) * self.k, SIZE - (self.oy + (p[1] - self.y0) * self.k)

    def pt(self, p) -> str:
        x, y = self.xy(p)
        return f"{_f(x)},{_f(y)}"


def _arc_points(c: Point, r: float, a0: float, a1: float) -> tuple[Point, Point]:
    return (Point(c.x + r * math.cos(a0), c.y + r * math.sin(a0)),
            Point(c.x + r * math.cos(a1), c.y + r * math.sin(a1)))


def _arc(cv: _Canvas, c: Point, r: float, a0: float, a1: float) -> str:
    """CCW arc from angle ``a0`` to ``a1``; y is flipped on screen, so the SVG sweep flag is 0."""
    p0, p1 = _arc_points(c, r, a0, a1)
    large = 1 if a1 - a0 > math.pi + 1e-12 else 0
    rr = _f(r * cv.k)
    return f"M {cv.pt(p0)} A {rr} {rr} 0 {large} 0 {cv.pt(p1)}"


def _extent(container) -> list[tuple[float, float]]:
    if isinstance(container, Circle):
        c, r = container.center, container.radius
        return [(c.x - r, c.y - r), (c.x + r, c.y + r)]
    if isinstance(container, (Semidisk, CircularSegment)):
        c, r = container.center, container.radius
        return [(c.x - r, c.y - r), (c.x + r, c.y + r)]
    if isinstance(container, Sector):
        a, r = container.apex, container.radius
        return [(a.x - r, a.y - r), (a.x + r, a.y + r)]
    return []


def _shape(cv: _Canvas, container, color: str) -> list[str]:
    stroke = f'fill="none" stroke="{color}" stroke-width="2"'
    line = f'stroke="{color}" stroke-width="1.5" stroke-dasharray="6,4"'
    if isinstance(container, Circle):
        x, y = cv.xy(container.center)
        return [f'<circle cx="{_f(x)}" cy="{_f(y)}" r="{_f(container.radius * cv.k)}" {stroke}/>']
    if isinstance(container, Semidisk):
        n = container.inward_normal
        phi = math.atan2(n.y, n.x)
        a, b = container.endpoints
        return [f'<path class="arc" d="{_arc(cv, container.center, container.radius, phi - math.pi / 2, phi + math.pi / 2)}" {stroke}/>',
                _line(cv, a, b, "diameter", line)]
    if isinstance(container, CircularSegment):
        n = container.chord_normal
        phi = math.atan2(n.y, n.x)
        half = container.theta / 2
        a, b = _arc_points(container.center, container.radius, phi - half, phi + half)
        return [f'<path class="arc" d="{_arc(cv, container.center, container.radius, phi - half, phi + half)}" {stroke}/>',
                _line(cv, a, b, "chord", line)]
    if isinstance(container, Sector):
        phi = math.atan2(container.axis.y, container.axis.x)
        al = container.half_angle
        a, b = _arc_points(container.apex, container.radius, phi - al, phi + al)
        tip = Point(container.apex.x + container.radius * container.axis.x,
                    container.apex.y + container.radius * container.axis.y)
        return [f'<path class="arc" d="{_arc(cv, container.apex, container.radius, phi - al, phi + al)}" {stroke}/>',
                _line(cv, container.apex, a, "radius", f'stroke="{color}" stroke-width="2"'),
                _line(cv, container.apex, b, "radius", f'stroke="{color}" stroke-width="2"'),
                _line(cv, container.apex, tip, "axis", line)]
    raise TypeError(f"cannot draw {type(container).__name__}")


def _line(cv: _Canvas, a, b, cls: str, style: str) -> str:
    (x1, y1), (x2, y2) = cv.xy(a), cv.xy(b)
    return f'<line class="{cls}" x1="{_f(x1)}" y1="{_f(y1)}" x2="{_f(x2)}" y2="{_f(y2)}" {style}/>'


def render_svg(hull: Hull, containers: Iterable = ()) -> str:
    """Hull polygon plus each container; support vertices of any :class:`SolveReport` are marked."""
    items = list(containers)
    shapes = [it.container if isinstance(it, SolveReport) else it for it in items]
    pts = [tuple(v) for v in hull.vertices]
    for s in shapes:
        pts += _extent(s)
    cv = _Canvas(pts)
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" '
           f'viewBox="0 0 {SIZE} {SIZE}">',
           f'<rect width="{SIZE}" height="{SIZE}" fill="white"/>']
    if hull.n >= 3:
        out.append(f'<polygon class="hull" points="{" ".join(cv.pt(v) for v in hull.vertices)}" '
                   f'fill="#eeeeee" stroke="black" stroke-width="1.5"/>')
    elif hull.n == 2:
        out.append(_line(cv, *hull.vertices, "hull", 'stroke="black" stroke-width="1.5"'))
    for k, s in enumerate(shapes):
        out.extend(_shape(cv, s, COLORS[k % len(COLORS)]))
    marked = sorted({i for it in items if isinstance(it, SolveReport) for i in it.support})
    for i in marked:
        x, y = cv.xy(hull.vertices[i])
        out.append(f'<circle class="support" cx="{_f(x)}" cy="{_f(y)}" r="5" fill="black"/>')
    for v in hull.vertices:
        x, y = cv.xy(v)
        out.append(f'<circle class="vertex" cx="{_f(x)}" cy="{_f(y)}" r="2.5" fill="#555555"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_series(x: Sequence[float], series: dict[str, Sequence[float]],
                  xlabel: str = "", ylabel: str = "") -> str:
    """Plain line plot of several series sharing one x axis."""
    xs = list(x)
    ys = [v for s in series.values() for v in s]
    lo_y, hi_y = min(ys + [0.0]), max(ys + [0.0])
    if hi_y == lo_y:
        hi_y = lo_y + 1.0
    lo_x, hi_x = min(xs), max(xs)
    if hi_x == lo_x:
        hi_x = lo_x + 1.0
    left, right, top, bottom = 80.0, SIZE - 40.0, 40.0, SIZE - 80.0

    def sx(v):
        return left + (v - lo_x) / (hi_x - lo_x) * (right - left)

    def sy(v):
        return bottom - (v - lo_y) / (hi_y - lo_y) * (bottom - top)

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" '
           f'viewBox="0 0 {SIZE} {SIZE}">',
           f'<rect width="{SIZE}" height="{SIZE}" fill="white"/>',
           f'<line x1="{_f(left)}" y1="{_f(bottom)}" x2="{_f(right)}" y2="{_f(bottom)}" stroke="black"/>',
           f'<line x1="{_f(left)}" y1="{_f(top)}" x2="{_f(left)}" y2="{_f(bottom)}" stroke="black"/>',
           f'<line x1="{_f(left)}" y1="{_f(sy(0.0))}" x2="{_f(right)}" y2="{_f(sy(0.0))}" '
           f'stroke="#999999" stroke-dasharray="4,4"/>']
    for v in (lo_y, hi_y):
        out.append(f'<text x="{_f(left - 8)}" y="{_f(sy(v) + 4)}" font-size="12" text-anchor="end">{v:.4g}</text>')
    for v in (lo_x, hi_x):
        out.append(f'<text x="{_f(sx(v))}" y="{_f(bottom + 20)}" font-size="12" text-anchor="middle">{v:.4g}</text>')
    if xlabel:
        out.append(f'<text x="{_f((left + right) / 2)}" y="{_f(SIZE - 30)}" font-size="14" '
                   f'text-anchor="middle">{xlabel}</text>')
    if ylabel:
        out.append(f'<text x="20" y="{_f((top + bottom) / 2)}" font-size="14" text-anchor="middle" '
                   f'transform="rotate(-90 20 {_f((top + bottom) / 2)})">{ylabel}</text>')
    for k, (name, vals) in enumerate(series.items()):
        color = COLORS[k % len(COLORS)]
        pts = " ".join(f"{_f(sx(a))},{_f(sy(b))}" for a, b in zip(xs, vals))
        out.append(f'<polyline class="series" points="{pts}" fill="none" stroke="{color}" stroke-width="2"/>')
        out.append(f'<text x="{_f(right - 10)}" y="{_f(top + 20 + 18 * k)}" font-size="13" '
                   f'text-anchor="end" fill="{color}">{name}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
