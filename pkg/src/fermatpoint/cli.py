"""Command-line front end.

    fermatpoint x1 y1 x2 y2 x3 y3 [--method analytic|weiszfeld|grid] [--json] [--svg PATH]
    fermatpoint --input points.json ...

Exit status: 0 on success, 1 on an I/O failure, 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import math
import re
import sys
from dataclasses import dataclass
from typing import List, Optional, Sequence, TextIO

from .errors import UsageError
from .geometry import DEFAULT_CLASSIFICATION_TOLERANCE, Point2, Triangle, classify
from .oracle import grid_refine_minimize, weiszfeld
from .solver import (
    SolverConfig,
    SolverResult,
    fermat_point,
    point_diagnostics,
)
from .svg import emit_svg

SCHEMA_VERSION = 1
METHODS = ("analytic", "weiszfeld", "grid")

EXIT_OK = 0
EXIT_IO = 1
EXIT_USAGE = 2


@dataclass(frozen=True)
class CliRequest:
    points: tuple
    method: str = "analytic"
    output: str = "text"
    svg_path: Optional[str] = None
    config: SolverConfig = SolverConfig()

    @property
    def triangle(self) -> Triangle:
        return Triangle(*self.points)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _build_parser() -> argparse.ArgumentParser:
    p = _Parser(
        prog="fermatpoint",
        description="Fermat point of a triangle, with stationarity certificate.",
    )
    # Let "-1e-3" and friends through as coordinates instead of option flags.
    p._negative_number_matcher = re.compile(r"^-(\d|\.\d)")
    p.add_argument("coords", nargs="*", metavar="COORD", help="x1 y1 x2 y2 x3 y3")
    p.add_argument("--input", metavar="FILE", help='JSON file {"points": [[x,y],[x,y],[x,y]]}')
    p.add_argument("--method", default="analytic", help="analytic (default), weiszfeld or grid")
    p.add_argument("--json", action="store_true", help="emit one JSON object")
    p.add_argument("--svg", metavar="PATH", help="write an SVG drawing of the construction")
    p.add_argument("--residual-tol", metavar="R", help="residual tolerance (default 1e-9)")
    p.add_argument("--class-tol", metavar="R", help="angle classification tolerance in radians")
    p.add_argument("--no-oracle-check", action="store_true", help="skip the Weiszfeld cross-check")
    return p


def _number(token, what: str) -> float:
    if isinstance(token, bool) or not isinstance(token, (str, int, float)):
        raise UsageError(f"{what}: expected a number, got {token!r}")
    try:
        v = float(token)
    except ValueError:
        raise UsageError(f"{what}: not a decimal number: {token!r}") from None
    if not math.isfinite(v):
        raise UsageError(f"{what}: not a finite number: {token!r}")
    return v


def _positive(token: str, what: str) -> float:
    v = _number(token, what)
    if not v > 0.0:
        raise UsageError(f"{what}: must be positive, got {token!r}")
    return v


def _points_from_json(path: str) -> List[Point2]:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise UsageError(f"{path}: invalid JSON: {e}") from None
    pts = doc.get("points") if isinstance(doc, dict) else None
    if not isinstance(pts, list) or len(pts) != 3:
        raise UsageError(f'{path}: expected {{"points": [[x,y],[x,y],[x,y]]}}')
    out = []
    for k, pt in enumerate(pts, start=1):
        if not isinstance(pt, list) or len(pt) != 2:
            raise UsageError(f"{path}: point {k} must be a pair [x, y], got {pt!r}")
        out.append(Point2(_number(pt[0], f"point {k} x"), _number(pt[1], f"point {k} y")))
    return out


def parse_args(argv: Sequence[str]) -> CliRequest:
    """Turn command-line tokens into a :class:`CliRequest`.

    Raises :class:`UsageError` naming the offending token, and ``OSError``
    when the ``--input`` file cannot be read.
    """
    args = _build_parser().parse_args(list(argv))

    if args.method not in METHODS:
        raise UsageError(f"--method: unknown method {args.method!r} (choose from {', '.join(METHODS)})")
    if args.input is not None:
        if args.coords:
            raise UsageError(f"unexpected coordinate {args.coords[0]!r} together with --input")
        points = _points_from_json(args.input)
    else:
        if len(args.coords) != 6:
            raise UsageError(f"expected 6 coordinates x1 y1 x2 y2 x3 y3, got {len(args.coords)}")
        c = [_number(tok, "coordinate") for tok in args.coords]
        points = [Point2(c[0], c[1]), Point2(c[2], c[3]), Point2(c[4], c[5])]

    residual_tol = 1e-9
    class_tol = DEFAULT_CLASSIFICATION_TOLERANCE
    if args.residual_tol is not None:
        residual_tol = _positive(args.residual_tol, "--residual-tol")
    if args.class_tol is not None:
        class_tol = _positive(args.class_tol, "--class-tol")
    cfg = SolverConfig(class_tol, residual_tol, not args.no_oracle_check)

    return CliRequest(
        points=tuple(points),
        method=args.method,
        output="json" if args.json else "text",
        svg_path=args.svg,
        config=cfg,
    )


def solve(req: CliRequest) -> SolverResult:
    """Answer ``req`` with the requested method.

    The oracle methods report the analytic answer's distance as their
    ``oracle_distance`` (and vice versa), so every method is cross-checked.
    """
    t = req.triangle
    cfg = req.config
    if req.method == "analytic":
        return fermat_point(t, cfg)

    report = weiszfeld(t) if req.method == "weiszfeld" else grid_refine_minimize(t)
    warnings = () if report.converged else (f"{req.method} did not converge",)
    oracle_distance = None
    if cfg.oracle_check:
        analytic = fermat_point(t, SolverConfig(cfg.classification_tolerance, cfg.residual_tolerance, False))
        oracle_distance = report.point.distance(analytic.fermat_point)
    diag = point_diagnostics(report.point, t, oracle_distance, warnings)
    return SolverResult(report.point, classify(t, cfg.classification_tolerance), report.value, diag)


def result_to_json(req: CliRequest, result: SolverResult) -> dict:
    d = result.diagnostics
    return {
        "schema": SCHEMA_VERSION,
        "method": req.method,
        "points": [[p.x, p.y] for p in req.points],
        "classification": result.classification.kind.value,
        "vertex_index": result.classification.index,
        "fermat_point": [result.fermat_point.x, result.fermat_point.y],
        "total_distance": result.total,
        "diagnostics": {
            "residual_norm": d.residual_norm,
            "angles": None if d.angles_at_solution is None else list(d.angles_at_solution),
            "vertex_margins": list(d.vertex_margins),
            "oracle_distance": d.oracle_distance,
            "warnings": list(d.warnings),
        },
        "note": result.note,
    }


def _g(v: Optional[float]) -> str:
    return "n/a" if v is None else format(v, ".17g")


def format_text(req: CliRequest, result: SolverResult) -> str:
    d = result.diagnostics
    lines = [
        f"classification:  {result.classification}",
        f"method:          {req.method}",
        f"fermat point:    {_g(result.fermat_point.x)} {_g(result.fermat_point.y)}",
        f"total distance:  {_g(result.total)}",
        f"residual norm:   {_g(d.residual_norm)}",
    ]
    if d.angles_at_solution is not None:
        lines.append("angles:          " + " ".join(_g(a) for a in d.angles_at_solution))
    lines.append("vertex margins:  " + " ".join(_g(m) for m in d.vertex_margins))
    if d.oracle_distance is not None:
        lines.append(f"oracle distance: {_g(d.oracle_distance)}")
    for w in d.warnings:
        lines.append(f"warning:         {w}")
    if result.note is not None:
        lines.append(f"note:            {result.note}")
    return "\n".join(lines) + "\n"


def run(req: CliRequest, stdout: Optional[TextIO] = None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    result = solve(req)
    if req.output == "json":
        stdout.write(json.dumps(result_to_json(req, result)) + "\n")
    else:
        stdout.write(format_text(req, result))
    if req.svg_path is not None:
        try:
            emit_svg(req.triangle, result, req.svg_path)
        except OSError as e:
            print(f"fermatpoint: cannot write SVG: {e}", file=sys.stderr)
            return EXIT_IO
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        req = parse_args(argv)
    except UsageError as e:
        print(f"fermatpoint: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"fermatpoint: cannot read input: {e}", file=sys.stderr)
        return EXIT_IO
    return run(req)

