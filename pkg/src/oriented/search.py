"""Small derivative-free minimizers shared by the solvers."""
from __future__ import annotations

import math
from typing import Callable, Sequence

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


def golden_section(f: Callable[[float], float], lo: float, hi: float, tol: float,
                   max_iter: int = 200) -> tuple[float, float, int]:
    """Minimize a unimodal ``f`` on ``[lo, hi]``; returns ``(x, f(x), iterations)``.

    The endpoints are compared against the final interior point, so a
    minimum sitting on the boundary is returned exactly.
    """
    a, b = lo, hi
    c = b - INV_PHI * (b - a)
    d = a + INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    it = 0
    while b - a > tol and it < max_iter:
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - INV_PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + INV_PHI * (b - a)
            fd = f(d)
        it += 1
    x, fx = (c, fc) if fc <= fd else (d, fd)
    for e in (lo, hi):
        fe = f(e)
        if fe < fx:
            x, fx = e, fe
    return x, fx, it


def envelope_minimax(us: Sequence[float], cs: Sequence[float],
                     lo: float = -math.inf, hi: float = math.inf) -> tuple[float, float]:
    """Exact minimizer of ``max_k (x - us[k])**2 + cs[k]`` over ``x`` in ``[lo, hi]``.

    All the parabolas share their leading coefficient, so
    ``max_k(...) - x**2`` is an upper envelope of lines. The envelope is
    built with a slope-sorted stack and the convex objective is minimized
    piece by piece. Returns ``(x, value)``.
    """
    lines = sorted((-2.0 * u, u * u + c) for u, c in zip(us, cs))
    env: list[tuple[float, float]] = []
    for a, b in lines:
        if env and env[-1][0] == a:
            env.pop()  # equal slope, sorted by intercept: the later one dominates
        while len(env) >= 2:
            (a1, b1), (a2, b2) = env[-2], env[-1]
            if (b1 - b2) * (a - a2) >= (b2 - b) * (a2 - a1):
                env.pop()
            else:
                break
        env.append((a, b))

    best_x, best_v = math.nan, math.inf
    left = -math.inf
    for k, (a, b) in enumerate(env):
        if k + 1 < len(env):
            a2, b2 = env[k + 1]
            right = (b - b2) / (a2 - a)
        else:
            right = math.inf
        pl, pr = max(left, lo), min(right, hi)
        if pl <= pr:
            x = min(max(-a / 2.0, pl), pr)
            v = x * x + a * x + b
            if v < best_v:
                best_x, best_v = x, v
        left = right
    if math.isnan(best_x):
        # [lo, hi] fell between rounding-level breakpoints; take the nearest end
        best_x = lo if math.isfinite(lo) else hi
    best_v = max((best_x - u) ** 2 + c for u, c in zip(us, cs))
    return best_x, best_v


def pattern_search(f: Callable[[tuple[float, float]], float], x0: Sequence[float],
                   step: float, tol: float, directions: Sequence[tuple[float, float]],
                   max_evals: int = 20000) -> tuple[tuple[float, float], float, int]:
    """Compass search in the plane with step halving.

    Each sweep moves to the best improving neighbour among ``directions``;
    when none improves the step is halved, until it drops below ``tol``.
    Returns ``(x, f(x), evaluations)``.
    """
    x = (float(x0[0]), float(x0[1]))
    fx = f(x)
    evals = 1
    while step >= tol and evals < max_evals:
        best, fbest = None, fx
        for dx, dy in directions:
            y = (x[0] + step * dx, x[1] + step * dy)
            fy = f(y)
            evals += 1
            if fy < fbest:
                best, fbest = y, fy
        if best is None:
            step *= 0.5
        else:
            x, fx = best, fbest
    return x, fx, evals


def compass(n_dirs: int, angle: float = 0.0) -> list[tuple[float, float]]:
    return [(math.cos(angle + 2 * math.pi * k / n_dirs), math.sin(angle + 2 * math.pi * k / n_dirs))
            for k in range(n_dirs)]
