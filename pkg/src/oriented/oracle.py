"""Slow brute-force reference solvers and reproducible random hulls.

The oracles only use the one fact that is easy to prove for every shape
here: an optimal container's straight side lies on a supporting line of the
hull. They sweep that line's orientation over a full circle instead of
assuming it follows a hull edge, so they can contradict the structural
assumptions the fast solvers rely on. Each answer carries a resolution
bound derived from the final grid spacing.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any

import numpy as np

from .errors import DegenerateHull
from .geometry import Circle, Hull, Point, circumcircle, convex_hull, dist
from .sector import ALPHA_FLOOR, BOX_FACTOR, degenerate_sector, fit_sector_given_apex
from .segment import CircularSegment, Objective, measures
from .semidisk import Semidisk

# Elements per vectorized block; bounds peak memory of the grid sweeps.
_BLOCK = 2_000_000
_PSI_MAX = math.pi / 2 - 1e-3
_PSI_ITERS_COARSE = 16
_PSI_ITERS_FINE = 32
_GOLDEN = (math.sqrt(5) - 1) / 2


@dataclass(frozen=True)
class OracleConfig:
    direction_steps: int = 3600
    refine_rounds: int = 3
    seed: int = 0

    def __post_init__(self):
        if self.direction_steps < 8:
            raise ValueError("direction_steps must be >= 8")
        if self.refine_rounds < 0:
            raise ValueError("refine_rounds must be >= 0")


@dataclass
class OracleResult:
    container: Any
    value: float
    resolution_bound: float
    degenerate: bool = False
    notes: dict[str, Any] = field(default_factory=dict)


# -- smallest circle by exhaustion -------------------------------------------

def brute_force_circle(points) -> Circle:
    """Smallest of all pair-diametral and triple circumcircles that contain every point. O(n^4)."""
    pts = [tuple(map(float, p)) for p in points]
    if len(pts) == 1:
        return Circle(Point(*pts[0]), 0.0)
    best = None

    def consider(c):
        nonlocal best
        cx, cy, r = c
        if best is not None and r >= best[2]:
            return
        if all(math.hypot(x - cx, y - cy) <= r * (1 + 1e-12) + 1e-300 for x, y in pts):
            best = c

    for a, b in itertools.combinations(pts, 2):
        consider(((a[0] + b[0]) / 2, (a[1] + b[1]) / 2, dist(a, b) / 2))
    for a, b, c in itertools.combinations(pts, 3):
        cc = circumcircle(a, b, c)
        if cc is not None:
            consider(cc)
    return Circle(Point(best[0], best[1]), best[2])


# -- shared sweep machinery ---------------------------------------------------

def _line_coords(pts: np.ndarray, phis: np.ndarray):
    """Coordinates of the vertices against the supporting line with inward normal at ``phis``.

    Returns ``(s, q, offset)``: position along the line, height above it
    (``>= 0``), and the line's offset along the normal.
    """
    c, s = np.cos(phis)[:, None], np.sin(phis)[:, None]
    along = -s * pts[:, 0] + c * pts[:, 1]
    up = c * pts[:, 0] + s * pts[:, 1]
    off = up.min(axis=1)
    return along, up - off[:, None], off


def _zoom_minimax(s: np.ndarray, q: np.ndarray, t: np.ndarray, rounds: int, m: int):
    """For every row, min over x of max_k (x - s_k)^2 + (t - q_k)^2 by repeated grid zoom.

    ``s`` and ``q`` are (K, n), ``t`` is (K,). The function is convex in
    ``x`` and its minimizer lies within the vertex span, so keeping one
    grid cell either side of the discrete minimum never loses it.
    Returns ``(x, squared radius)``.
    """
    K, n = s.shape
    out_x = np.empty(K)
    out_v = np.empty(K)
    w = np.linspace(0.0, 1.0, m)
    chunk = max(1, _BLOCK // (m * n))
    for a in range(0, K, chunk):
        ss, dq = s[a:a + chunk], (t[a:a + chunk, None] - q[a:a + chunk]) ** 2
        lo, hi = ss.min(axis=1), ss.max(axis=1)
        rows = np.arange(len(ss))
        for _ in range(rounds):
            grid = lo[:, None] + (hi - lo)[:, None] * w[None, :]
            val = ((grid[:, :, None] - ss[:, None, :]) ** 2 + dq[:, None, :]).max(axis=2)
            k = val.argmin(axis=1)
            x = grid[rows, k]
            step = (hi - lo) / (m - 1)
            lo, hi = x - step, x + step
        out_x[a:a + chunk] = x
        out_v[a:a + chunk] = val[rows, k]
    return out_x, out_v


def _local_minima(vals: np.ndarray, count: int, cyclic: bool = True) -> list[int]:
    if cyclic:
        left, right = np.roll(vals, 1), np.roll(vals, -1)
    else:
        left = np.concatenate([[np.inf], vals[:-1]])
        right = np.concatenate([vals[1:], [np.inf]])
    idx = np.nonzero((vals <= left) & (vals <= right) & np.isfinite(vals))[0]
    idx = idx[np.argsort(vals[idx], kind="stable")]
    return [int(i) for i in idx[:count]]


def _phase(cfg: OracleConfig, spacing: float) -> float:
    return float(np.random.default_rng(cfg.seed).uniform(0.0, spacing))


# -- semidisk -----------------------------------------------------------------

def oracle_semidisk(hull: Hull, cfg: OracleConfig = OracleConfig()) -> OracleResult:
    """Orientation sweep of the diameter's supporting line; 1-D zoom for the center on it."""
    pts = hull.array
    D = hull.diameter
    if hull.n == 1:
        return OracleResult(Semidisk(hull.vertices[0], 0.0, Point(0.0, 1.0)), 0.0, 0.0, True)

    def radii(phis):
        s, q, _ = _line_coords(pts, phis)
        x, v = _zoom_minimax(s, q, np.zeros(len(phis)), 14, 17)
        return x, np.sqrt(v)

    dphi = 2 * math.pi / cfg.direction_steps
    phis = _phase(cfg, dphi) + dphi * np.arange(cfg.direction_steps)
    _, r = radii(phis)
    best = (math.inf, 0.0)
    for k in _local_minima(r, 5):
        phi0, spacing = float(phis[k]), dphi
        for _ in range(cfg.refine_rounds):
            fine = phi0 + np.linspace(-spacing, spacing, 21)
            _, rf = radii(fine)
            j = int(rf.argmin())
            phi0, spacing = float(fine[j]), spacing / 10
        _, rb = radii(np.array([phi0]))
        if rb[0] < best[0]:
            best = (float(rb[0]), phi0, spacing)
    r_best, phi, spacing = best
    s, q, off = _line_coords(pts, np.array([phi]))
    x, _ = _zoom_minimax(s, q, np.zeros(1), 14, 17)
    n = Point(math.cos(phi), math.sin(phi))
    e = Point(-n.y, n.x)
    c = Point(off[0] * n.x + x[0] * e.x, off[0] * n.y + x[0] * e.y)
    bound = 2.0 * D * spacing + 1e-12 * D
    return OracleResult(Semidisk(c, r_best, n), r_best, bound, notes={"phi": phi})


# -- circular segment ---------------------------------------------------------

def _segment_values(pts, phis, psis, D, obj, rounds, m):
    """Objective on the (phi, psi) product grid; the center height is t = D tan(psi)."""
    P, T = np.meshgrid(phis, psis, indexing="ij")
    P, T = P.ravel(), D * np.tan(T.ravel())
    s, q, _ = _line_coords(pts, P)
    x, v = _zoom_minimax(s, q, T, rounds, m)
    r = np.sqrt(v)
    val = measures_array(r, -T, obj)
    shape = (len(phis), len(psis))
    return val.reshape(shape), x.reshape(shape), r.reshape(shape)


def _golden_psi(pts, phis, lo, hi, D, obj, iters):
    """Per-orientation golden-section search for psi in ``[lo, hi]``; returns ``(value, psi)``.

    The objective has a sharp kink in psi, so grid minima alone rank
    orientations poorly.
    """
    g = _GOLDEN
    s, q, _ = _line_coords(pts, phis)

    def f(ps):
        _, v = _zoom_minimax(s, q, D * np.tan(ps), 10, 9)
        return measures_array(np.sqrt(v), -D * np.tan(ps), obj)

    a, b = lo + (1 - g) * (hi - lo), lo + g * (hi - lo)
    fa, fb = f(a), f(b)
    for _ in range(iters):
        left = fa <= fb
        hi = np.where(left, b, hi)
        lo = np.where(left, lo, a)
        na = np.where(left, lo + (1 - g) * (hi - lo), b)
        nb = np.where(left, a, lo + g * (hi - lo))
        fn = f(np.where(left, na, nb))
        fa, fb = np.where(left, fn, fb), np.where(left, fa, fn)
        a, b = na, nb
    return np.minimum(fa, fb), np.where(fa <= fb, a, b)


def measures_array(r, offset, obj):
    theta = 2.0 * np.arccos(np.clip(offset / np.where(r > 0, r, 1.0), -1.0, 1.0))
    if obj is Objective.AREA:
        return r * r * (theta - np.sin(theta)) / 2.0
    return r * theta + 2.0 * r * np.sin(theta / 2.0)


def oracle_segment(hull: Hull, obj: Objective, cfg: OracleConfig = OracleConfig()) -> OracleResult:
    """Grid over chord orientation x center height, exact-enough center position along the chord.

    Nothing ties the chord to a hull edge or its midpoint to the edge, so
    the result can be used to test both.
    """
    obj = Objective(obj)
    if hull.n < 3:
        raise DegenerateHull("segment oracle needs n >= 3")
    pts = hull.array
    D = hull.diameter
    dphi = 2 * math.pi / cfg.direction_steps
    phis = _phase(cfg, dphi) + dphi * np.arange(cfg.direction_steps)
    psis = np.linspace(-_PSI_MAX, _PSI_MAX, 17)
    dpsi = float(psis[1] - psis[0])
    coarse, _, _ = _segment_values(pts, phis, psis, D, obj, 6, 9)
    j = coarse.argmin(axis=1)
    lo = psis[np.maximum(j - 1, 0)]
    hi = psis[np.minimum(j + 1, len(psis) - 1)]
    per_phi, psi_best = _golden_psi(pts, phis, lo, hi, D, obj, _PSI_ITERS_COARSE)

    # refine every candidate orientation at once, one row per candidate
    ks = _local_minima(per_phi, 10)
    phi0, psi0, sp_phi = phis[ks], psi_best[ks], dphi
    w = np.linspace(-1.0, 1.0, 21)
    rows = np.arange(len(ks))
    for _ in range(cfg.refine_rounds):
        fp = (phi0[:, None] + sp_phi * w[None, :]).ravel()
        flo = np.repeat(np.maximum(psi0 - dpsi, -_PSI_MAX), 21)
        fhi = np.repeat(np.minimum(psi0 + dpsi, _PSI_MAX), 21)
        fv, fs = _golden_psi(pts, fp, flo, fhi, D, obj, _PSI_ITERS_FINE)
        i = fv.reshape(-1, 21).argmin(axis=1)
        phi0, psi0 = fp.reshape(-1, 21)[rows, i], fs.reshape(-1, 21)[rows, i]
        sp_phi = sp_phi / 10
    best = None
    for p0, s0 in zip(phi0, psi0):
        vals, xs, rs = _segment_values(pts, np.array([p0]), np.array([s0]), D, obj, 14, 17)
        cand = (float(vals[0, 0]), float(p0), float(s0), float(xs[0, 0]), float(rs[0, 0]), sp_phi,
                2 * dpsi * _GOLDEN ** _PSI_ITERS_FINE)
        if best is None or cand[0] < best[0]:
            best = cand

    value, phi, psi, x, r, sp_phi, sp_psi = best
    t = D * math.tan(psi)
    _, _, off = _line_coords(pts, np.array([phi]))
    n = Point(math.cos(phi), math.sin(phi))
    e = Point(-n.y, n.x)
    base = off[0]
    c = Point((base + t) * n.x + x * e.x, (base + t) * n.y + x * e.y)
    seg = CircularSegment(c, r, n, -t)
    value = measures(r, -t)[1 if obj is Objective.AREA else 2]

    # Lipschitz-style bound: objective slope w.r.t. a rigid rotation of the line
    # is at most ~ (d objective / d r) * D, and likewise for the height.
    slope = 2 * math.pi * r if obj is Objective.AREA else 2 * math.pi + 2
    sec2 = 1.0 / math.cos(psi) ** 2
    bound = slope * (2.0 * D * sp_phi + D * sec2 * sp_psi)

    # Does the winning chord run along a hull edge?
    a = pts
    b = np.roll(pts, -1, axis=0)
    ang_edges = np.arctan2(b[:, 1] - a[:, 1], b[:, 0] - a[:, 0]) + math.pi / 2
    diff = np.abs((ang_edges - phi + math.pi) % (2 * math.pi) - math.pi)
    nearest = int(diff.argmin())
    mid = seg.chord_midpoint
    ea, eb = a[nearest], b[nearest]
    ev = eb - ea
    s_mid = float(((np.array(mid) - ea) @ ev) / (ev @ ev))
    return OracleResult(seg, value, bound, notes={
        "phi": phi, "nearest_edge": nearest, "angle_to_edge": float(diff[nearest]),
        "edge_aligned": bool(diff[nearest] <= 4 * sp_phi),
        "midpoint_edge_param": s_mid,
    })


# -- sector -------------------------------------------------------------------

def _sector_values(hull: Hull, P: np.ndarray, obj: Objective):
    """Best-sector objective for every apex row of ``P``; ``inf`` inside the hull."""
    V = hull.array
    D = hull.diameter
    out = np.empty(len(P))
    alpha_out = np.empty(len(P))
    r_out = np.empty(len(P))
    a = V
    e = np.roll(V, -1, axis=0) - V
    nrm = np.column_stack([-e[:, 1], e[:, 0]]) / np.hypot(e[:, 0], e[:, 1])[:, None]
    chunk = max(1, _BLOCK // (4 * len(V)))
    for s in range(0, len(P), chunk):
        p = P[s:s + chunk]
        rel = V[None, :, :] - p[:, None, :]
        d = np.hypot(rel[..., 0], rel[..., 1])
        ang = np.arctan2(rel[..., 1], rel[..., 0])
        coincident = d <= 1e-12 * D
        ang = np.where(coincident, np.roll(ang, -1, axis=1), ang)
        ang.sort(axis=1)
        gaps = np.diff(np.concatenate([ang, ang[:, :1] + 2 * math.pi], axis=1), axis=1)
        alpha = np.maximum((2 * math.pi - gaps.max(axis=1)) / 2, ALPHA_FLOOR)
        r = d.max(axis=1)
        inside = (((p[:, None, :] - a[None]) * nrm[None]).sum(axis=2) > 1e-12 * D).all(axis=1)
        val = alpha * r * r if obj is Objective.AREA else 2 * r * (1 + alpha)
        out[s:s + chunk] = np.where(inside, np.inf, val)
        alpha_out[s:s + chunk] = alpha
        r_out[s:s + chunk] = r
    return out, alpha_out, r_out


def oracle_sector(hull: Hull, obj: Objective, cfg: OracleConfig = OracleConfig()) -> OracleResult:
    """Dense apex grid over the box 8x the hull's bounding box, refined around the best cells."""
    obj = Objective(obj)
    if hull.n < 3:
        rep = degenerate_sector(hull, obj)
        return OracleResult(rep.container, rep.value, 0.0, True, notes=dict(rep.notes))
    V = hull.array
    lo, hi = V.min(axis=0), V.max(axis=0)
    mid, half = (lo + hi) / 2, (hi - lo) / 2 * BOX_FACTOR
    g = max(64, 4 * int(math.sqrt(cfg.direction_steps)))
    off = _phase(cfg, 1.0 / g)
    w = -1.0 + 2.0 * (off + np.arange(g) / g)
    X, Y = np.meshgrid(mid[0] + half[0] * w, mid[1] + half[1] * w, indexing="ij")
    vals, _, _ = _sector_values(hull, np.column_stack([X.ravel(), Y.ravel()]), obj)
    vals = vals.reshape(g, g)
    step = 2 * half / g

    # local minima over the 8-neighbourhood, best first
    padded = np.pad(vals, 1, constant_values=np.inf)
    is_min = np.ones_like(vals, dtype=bool)
    for di in (-1, 0, 1):
        for dj in (-1, 0, 1):
            if di or dj:
                is_min &= vals <= padded[1 + di:1 + di + g, 1 + dj:1 + dj + g]
    cells = np.argwhere(is_min & np.isfinite(vals))
    cells = cells[np.argsort(vals[cells[:, 0], cells[:, 1]], kind="stable")][:8]

    best = None
    for i, j in cells:
        c = np.array([X[i, j], Y[i, j]])
        sp = step.copy()
        bound = _grid_lipschitz(vals, i, j, step) * float(np.hypot(*step))
        for _ in range(cfg.refine_rounds):
            fx = c[0] + np.linspace(-sp[0], sp[0], 21)
            fy = c[1] + np.linspace(-sp[1], sp[1], 21)
            FX, FY = np.meshgrid(fx, fy, indexing="ij")
            fv, _, _ = _sector_values(hull, np.column_stack([FX.ravel(), FY.ravel()]), obj)
            fv = fv.reshape(21, 21)
            a, b = np.unravel_index(int(fv.argmin()), fv.shape)
            c = np.array([fx[a], fy[b]])
            fine = sp / 10
            bound = _grid_lipschitz(fv, a, b, fine) * float(np.hypot(*fine))
            sp = fine
        v, _, _ = _sector_values(hull, c[None, :], obj)
        if best is None or v[0] < best[0]:
            best = (float(v[0]), c, bound)

    value, apex, bound = best
    sec = fit_sector_given_apex(hull, apex)
    return OracleResult(sec, sec.value(obj), bound, sec.half_angle <= ALPHA_FLOOR,
                        notes={"grid": g})


def _grid_lipschitz(vals: np.ndarray, i: int, j: int, spacing: np.ndarray) -> float:
    """Largest finite slope from cell ``(i, j)`` to its 8 neighbours."""
    best = 0.0
    for di in (-1, 0, 1):
        for dj in (-1, 0, 1):
            a, b = i + di, j + dj
            if (di or dj) and 0 <= a < vals.shape[0] and 0 <= b < vals.shape[1]:
                if math.isfinite(vals[a, b]):
                    step = math.hypot(di * spacing[0], dj * spacing[1])
                    best = max(best, abs(vals[a, b] - vals[i, j]) / step)
    return best


# -- random hulls ----------------------------------------------------------------

class HullFamily(str, Enum):
    UNIFORM_DISK = "uniform-disk"
    NEAR_CIRCLE = "near-circle"
    NEAR_SEMICIRCLE = "near-semicircle"
    THIN_TRIANGLE = "thin-triangle"


def random_hull(seed: int, n_points: int, family: HullFamily = HullFamily.UNIFORM_DISK) -> Hull:
    """Deterministic random hull for a ``(seed, n_points, family)`` triple."""
    if n_points < 3:
        raise ValueError("n_points must be >= 3")
    family = HullFamily(family)
    rng = np.random.default_rng(seed)
    if family is HullFamily.UNIFORM_DISK:
        r = np.sqrt(rng.uniform(0, 1, n_points))
        a = rng.uniform(0, 2 * math.pi, n_points)
        pts = np.column_stack([r * np.cos(a), r * np.sin(a)])
    elif family is HullFamily.NEAR_CIRCLE:
        a = 2 * math.pi * (np.arange(n_points) + rng.uniform(-0.25, 0.25, n_points)) / n_points
        r = 1.0 + 0.01 * rng.uniform(-1, 1, n_points)
        pts = np.column_stack([r * np.cos(a), r * np.sin(a)])
    elif family is HullFamily.NEAR_SEMICIRCLE:
        m = max(n_points - 2, 2)
        a = math.pi * np.arange(m) / (m - 1)
        r = 1.0 + 0.01 * rng.uniform(-1, 1, m)
        r[0] = r[-1] = 1.0
        arc = np.column_stack([r * np.cos(a), r * np.sin(a)])
        chord = np.column_stack([rng.uniform(-1, 1, n_points - m), np.zeros(n_points - m)])
        pts = np.vstack([arc, chord])
    else:
        a = rng.uniform(math.radians(5), math.radians(85))
        pts = np.array([[-1.0, 0.0], [1.0, 0.0], [math.sin(a), math.cos(a)]])
    return convex_hull(pts.tolist())


def random_convex_polygon(seed: int, n: int) -> Hull:
    """``n`` points in convex position on a randomly stretched and rotated ellipse.

    Angles are stratified (one per ``2 pi / n`` slot) so no three points are
    close enough to be dropped as collinear; the hull has exactly ``n`` vertices.
    """
    rng = np.random.default_rng(seed)
    a = 2 * math.pi * (np.arange(n) + rng.uniform(0.1, 0.9, n)) / n
    sx, sy = 1.0, rng.uniform(0.2, 1.0)
    rot = rng.uniform(0, 2 * math.pi)
    x, y = sx * np.cos(a), sy * np.sin(a)
    c, s = math.cos(rot), math.sin(rot)
    pts = np.column_stack([c * x - s * y, s * x + c * y])
    return convex_hull(pts.tolist())
