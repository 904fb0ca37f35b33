"""``oriented`` command line: solve, oracle, experiment, fuzz.

Exit codes: 0 success, 1 a fuzz check failed, 2 malformed input,
3 bad command line, 4 the solver rejected degenerate input.
"""
from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from pathlib import Path
from typing import Any, Sequence

import numpy as np

from .errors import GeometryError, InvalidInput
from .experiments import LEMMA3_COLUMNS, lemma3_sweep, q3_search, remark_crossover
from .geometry import (Circle, Hull, Point, as_point, circle_support, convex_hull,
                       min_enclosing_circle)
from .oracle import (HullFamily, OracleConfig, brute_force_circle, oracle_sector, oracle_segment,
                     oracle_semidisk, random_hull)
from .report import SolveReport
from .sector import Sector, smallest_sector
from .segment import CircularSegment, Objective, objective_value, smallest_segment
from .semidisk import Semidisk, smallest_semidisk
from .svg import render_series, render_svg

SHAPES = ("circle", "semidisk", "segment", "sector")
EXIT_OK, EXIT_CHECK, EXIT_INPUT, EXIT_USAGE, EXIT_DEGENERATE = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on bad flags; this CLI reserves 2 for bad input files."""

    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


# -- input --------------------------------------------------------------------------

def read_points(path: str | Path, fmt: str | None = None) -> list[Point]:
    """Points from a CSV (``x,y`` per line, ``#`` comments) or JSON (``{"points": [...]}``) file."""
    path = Path(path)
    if fmt is None:
        fmt = "json" if path.suffix.lower() == ".json" else "csv"
    try:
        text = path.read_text()
    except OSError as exc:
        raise InvalidInput(f"cannot read {path}: {exc.strerror}") from exc
    if fmt == "json":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InvalidInput(f"{path}: invalid JSON: {exc.msg}") from exc
        if not isinstance(data, dict) or not isinstance(data.get("points"), list):
            raise InvalidInput(f'{path}: expected an object with a "points" list')
        raw = data["points"]
    else:
        raw = []
        for row in csv.reader(line for line in text.splitlines()
                              if line.strip() and not line.lstrip().startswith("#")):
            if len(row) != 2:
                raise InvalidInput(f"{path}: expected 'x,y', got {','.join(row)!r}")
            raw.append(row)
    pts = []
    for p in raw:
        if isinstance(p, (list, tuple)) and len(p) != 2:
            raise InvalidInput(f"{path}: expected two coordinates, got {p!r}")
        if isinstance(p, (list, tuple)) and any(isinstance(c, bool) for c in p):
            raise InvalidInput(f"{path}: not a coordinate pair: {p!r}")
        pts.append(as_point(p))
    if not pts:
        raise InvalidInput(f"{path}: no points")
    return pts


# -- report documents -----------------------------------------------------------------

def _angle(v: Point) -> float:
    return math.atan2(v.y, v.x)


def container_parameters(container) -> dict[str, Any]:
    if isinstance(container, Circle):
        return {"center": list(container.center), "radius": container.radius}
    if isinstance(container, Semidisk):
        return {"center": list(container.center), "radius": container.radius,
                "normal_angle": _angle(container.inward_normal)}
    if isinstance(container, CircularSegment):
        return {"center": list(container.center), "radius": container.radius,
                "normal_angle": _angle(container.chord_normal), "chord_offset": container.chord_offset}
    if isinstance(container, Sector):
        return {"apex": list(container.apex), "radius": container.radius,
                "axis_angle": _angle(container.axis), "half_angle": container.half_angle}
    raise TypeError(f"unknown container {type(container).__name__}")


def container_from_document(doc: dict[str, Any]):
    """Rebuild the container a report document describes."""
    p = doc["parameters"]
    shape = doc["shape"]
    if shape == "circle":
        return Circle(Point(*p["center"]), p["radius"])
    if shape == "semidisk":
        a = p["normal_angle"]
        return Semidisk(Point(*p["center"]), p["radius"], Point(math.cos(a), math.sin(a)))
    if shape == "segment":
        a = p["normal_angle"]
        return CircularSegment(Point(*p["center"]), p["radius"], Point(math.cos(a), math.sin(a)),
                               p["chord_offset"])
    if shape == "sector":
        a = p["axis_angle"]
        return Sector(Point(*p["apex"]), p["radius"], Point(math.cos(a), math.sin(a)), p["half_angle"])
    raise ValueError(f"unknown shape {shape!r}")


def document_value(doc: dict[str, Any]) -> float:
    """Objective recomputed from the document's parameters alone."""
    c = container_from_document(doc)
    obj = doc["objective"]
    if obj == "radius":
        return c.radius
    if isinstance(c, CircularSegment):
        return objective_value(c.radius, c.chord_offset, Objective(obj))
    return c.area if obj == "area" else c.perimeter


def report_document(shape: str, rep: SolveReport) -> dict[str, Any]:
    return {
        "shape": shape,
        "objective": rep.objective,
        "parameters": container_parameters(rep.container),
        "value": rep.value,
        "support_vertices": list(rep.support),
        "winning_edge": rep.edge_index,
        "construction": rep.construction,
        "tolerances": dict(sorted(rep.tolerances.items())),
        "degenerate": bool(rep.degenerate),
    }


def dumps(obj: Any, indent: int = 2, _level: int = 0) -> str:
    """JSON with every float written at 17 significant digits (lossless, byte-stable)."""
    pad = " " * (indent * (_level + 1))
    end = " " * (indent * _level)
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, (float, np.floating)):
        v = float(obj)
        if not math.isfinite(v):
            return json.dumps(str(v))
        return "%.17g" % v
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {dumps(v, indent, _level + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        if all(isinstance(v, (int, float, np.number)) and not isinstance(v, bool) for v in obj):
            return "[" + ", ".join(dumps(v) for v in obj) + "]"
        items = [pad + dumps(v, indent, _level + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _emit(doc: dict[str, Any], output: str | None) -> None:
    text = dumps(doc) + "\n"
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


# -- solve / oracle ---------------------------------------------------------------------

def _objective(shape: str, name: str | None) -> Objective | None:
    if shape in ("circle", "semidisk"):
        if name is not None:
            raise UsageError(f"--objective does not apply to {shape} (it minimizes the radius)")
        return None
    return Objective(name or "area")


def solve(shape: str, hull: Hull, obj: Objective | None) -> SolveReport:
    if shape == "circle":
        c = min_enclosing_circle(hull)
        return SolveReport(c, "radius", c.radius, circle_support(hull, c), None, "welzl",
                           tolerances={"slack": 1e-12}, degenerate=hull.n == 1)
    if shape == "semidisk":
        return smallest_semidisk(hull)
    if shape == "segment":
        return smallest_segment(hull, obj)
    return smallest_sector(hull, obj)


def cmd_solve(args) -> int:
    hull = convex_hull(read_points(args.input, args.format))
    obj = _objective(args.shape, args.objective)
    rep = solve(args.shape, hull, obj)
    _emit(report_document(args.shape, rep), args.output)
    if args.svg:
        Path(args.svg).write_text(render_svg(hull, [rep]))
    return EXIT_OK


def run_oracle(shape: str, hull: Hull, obj: Objective | None, cfg: OracleConfig):
    """``(SolveReport, resolution bound)`` from the brute-force reference for ``shape``."""
    if shape == "circle":
        c = brute_force_circle(hull.vertices)
        return SolveReport(c, "radius", c.radius, circle_support(hull, c), None,
                           "pair-triple-exhaustive"), 0.0
    if shape == "semidisk":
        res = oracle_semidisk(hull, cfg)
        objective = "radius"
    elif shape == "segment":
        res = oracle_segment(hull, obj, cfg)
        objective = obj.value
    else:
        res = oracle_sector(hull, obj, cfg)
        objective = obj.value
    rep = SolveReport(res.container, objective, res.value, [], None, f"{shape}-oracle",
                      tolerances={"resolution_bound": res.resolution_bound},
                      degenerate=res.degenerate, notes=res.notes)
    return rep, res.resolution_bound


def cmd_oracle(args) -> int:
    hull = convex_hull(read_points(args.input, args.format))
    obj = _objective(args.shape, args.objective)
    cfg = OracleConfig(args.direction_steps, args.refine_rounds, args.seed)
    rep, bound = run_oracle(args.shape, hull, obj, cfg)
    doc = report_document(args.shape, rep)
    doc["resolution_bound"] = bound
    doc["oracle_config"] = {"direction_steps": cfg.direction_steps,
                            "refine_rounds": cfg.refine_rounds, "seed": cfg.seed}
    _emit(doc, args.output)
    if args.svg:
        Path(args.svg).write_text(render_svg(hull, [rep]))
    return EXIT_OK


# -- experiments ------------------------------------------------------------------------

def _write_csv(path: Path, header: Sequence[str], rows) -> None:
    with path.open("w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        for r in rows:
            w.writerow(["%.17g" % v for v in r])


def cmd_experiment(args) -> int:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    if args.name == "lemma3":
        res = lemma3_sweep(args.start, args.stop, args.step)
        _write_csv(out / "lemma3.csv", LEMMA3_COLUMNS, res.rows)
        xs = [r[0] for r in res.rows]
        (out / "lemma3.svg").write_text(render_series(
            xs, {"area optimum": [r[1] for r in res.rows],
                 "perimeter optimum": [r[2] for r in res.rows]},
            "apex angle (degrees)", "chord midpoint x"))
        summary = res.summary()
        (out / "lemma3_summary.json").write_text(dumps(summary) + "\n")
        print(f"onset area {summary['onset_area_deg']} deg, onset perimeter "
              f"{summary['onset_perimeter_deg']} deg, max |u_area - u_perimeter| "
              f"{summary['max_abs_u_diff']:.6g} at {summary['max_abs_u_diff_at_deg']} deg")
    elif args.name == "remark":
        res = remark_crossover(args.steps)
        _write_csv(out / "remark.csv", ("lambda", "semidisk_area", "circle_area"), res.rows)
        summary = {"lambda_star": res.lam_star, "area_gap_at_lambda_star": res.gap_at_star,
                   "bisection_iterations": res.iterations}
        (out / "remark.json").write_text(dumps(summary) + "\n")
        print(f"lambda* = {res.lam_star:.12f}, |semidisk - circle| = {abs(res.gap_at_star):.3g}")
    else:
        if args.seed is None:
            raise UsageError("experiment q3 requires --seed")
        cfg = OracleConfig(args.direction_steps, args.refine_rounds, args.seed)
        res = q3_search(args.samples, args.seed, cfg)
        (out / "q3.json").write_text(dumps(res.to_dict()) + "\n")
        w = res.witness
        print(f"max chord angle {res.max_angle:.6g} rad over {res.samples} hulls; witness "
              + ("none" if w is None else f"verified={w['verified']}"))
    return EXIT_OK


# -- fuzz ---------------------------------------------------------------------------------

DEFAULT_FUZZ_TOL = {"circle": 1e-9, "semidisk": 1e-6, "segment": 1e-3, "sector": 1e-2}
FUZZ_MAX_N = {"circle": 10, "semidisk": 12, "segment": 10, "sector": 8}


def fuzz(shape: str, samples: int, seed: int, tol: float, obj: Objective | None,
         cfg: OracleConfig) -> list[dict[str, Any]]:
    """Solver vs oracle on random hulls; one record per sample."""
    rng = np.random.default_rng(seed)
    families = list(HullFamily)
    records = []
    for k in range(samples):
        sub = int(rng.integers(2 ** 62))
        hull = random_hull(sub, int(rng.integers(3, FUZZ_MAX_N[shape] + 1)), families[k % len(families)])
        if hull.n < 3 and shape in ("segment", "sector"):
            continue
        o = obj if obj is not None else (None if shape in ("circle", "semidisk") else Objective.AREA)
        got = solve(shape, hull, o).value
        ref, bound = run_oracle(shape, hull, o, cfg)
        if shape in ("circle", "semidisk"):
            ok = ref.value - tol <= got <= ref.value + tol + bound
        else:
            ok = abs(got - ref.value) <= tol * abs(ref.value) + bound
        records.append({"sample": k, "n": hull.n, "solver": got, "oracle": ref.value,
                        "bound": bound, "ok": bool(ok)})
    return records


def cmd_fuzz(args) -> int:
    obj = _objective(args.shape, args.objective)
    tol = args.tolerance if args.tolerance is not None else DEFAULT_FUZZ_TOL[args.shape]
    cfg = OracleConfig(args.direction_steps, args.refine_rounds, args.seed)
    records = fuzz(args.shape, args.samples, args.seed, tol, obj, cfg)
    failed = [r for r in records if not r["ok"]]
    _emit({"shape": args.shape, "samples": len(records), "tolerance": tol,
           "failures": failed}, args.output)
    return EXIT_CHECK if failed else EXIT_OK


# -- parser ---------------------------------------------------------------------------------

def _positive(kind):
    def parse(text):
        v = kind(text)
        if v <= 0:
            raise argparse.ArgumentTypeError(f"must be positive, got {text}")
        return v
    return parse


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="oriented", description="Smallest oriented containers of planar point sets.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_io(sp):
        sp.add_argument("--shape", required=True, choices=SHAPES)
        sp.add_argument("--objective", choices=[o.value for o in Objective])
        sp.add_argument("--input", required=True)
        sp.add_argument("--format", choices=("csv", "json"))
        sp.add_argument("--output")
        sp.add_argument("--svg")

    def add_oracle(sp, seed_required):
        sp.add_argument("--direction-steps", type=int, default=OracleConfig.direction_steps)
        sp.add_argument("--refine-rounds", type=int, default=OracleConfig.refine_rounds)
        if seed_required:
            sp.add_argument("--seed", type=int, required=True)
        else:
            sp.add_argument("--seed", type=int, default=OracleConfig.seed)

    s = sub.add_parser("solve", help="compute a smallest container")
    add_io(s)
    s.set_defaults(func=cmd_solve)

    o = sub.add_parser("oracle", help="brute-force reference answer with its resolution bound")
    add_io(o)
    add_oracle(o, seed_required=False)
    o.set_defaults(func=cmd_oracle)

    e = sub.add_parser("experiment", help="run a numerical experiment")
    e.add_argument("name", choices=("lemma3", "remark", "q3"))
    e.add_argument("--out", required=True)
    e.add_argument("--start", type=float, default=0.0, help="lemma3: first apex angle, degrees")
    e.add_argument("--stop", type=float, default=80.0, help="lemma3: last apex angle, degrees")
    e.add_argument("--step", type=_positive(float), default=0.25, help="lemma3: angle step, degrees")
    e.add_argument("--steps", type=int, default=32, help="remark: lambda samples")
    e.add_argument("--samples", type=_positive(int), default=200, help="q3: random hulls")
    e.add_argument("--seed", type=int, help="q3: required")
    e.add_argument("--direction-steps", type=int, default=OracleConfig.direction_steps)
    e.add_argument("--refine-rounds", type=int, default=OracleConfig.refine_rounds)
    e.set_defaults(func=cmd_experiment)

    f = sub.add_parser("fuzz", help="differential check of a solver against its oracle")
    f.add_argument("--shape", required=True, choices=SHAPES)
    f.add_argument("--objective", choices=[o.value for o in Objective])
    f.add_argument("--samples", type=_positive(int), required=True)
    f.add_argument("--tolerance", type=float)
    f.add_argument("--output")
    add_oracle(f, seed_required=True)
    f.set_defaults(func=cmd_fuzz)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except InvalidInput as exc:
        print(f"oriented: invalid input: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except GeometryError as exc:
        print(f"oriented: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except ValueError as exc:
        # argument combinations argparse cannot express (e.g. --steps < 8)
        print(f"oriented: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
