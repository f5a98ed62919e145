"""Standalone SVG drawing of a triangle and its Fermat point construction."""

from __future__ import annotations

from typing import List

from .geometry import Triangle
from .solver import SolverResult


def _f(v: float) -> str:
    s = format(v, ".10g")
    return "0" if s == "-0" else s


def render_svg(t: Triangle, result: SolverResult) -> str:
    """SVG source for ``t``, the segments to its Fermat point and, for an
    interior solution, the two Torricelli circles with their centres.

    Data y grows upward, so every y is negated on output. Output depends only
    on the inputs.
    """
    fp = result.fermat_point
    xs = [v.x for v in t.vertices] + [fp.x]
    ys = [v.y for v in t.vertices] + [fp.y]
    for c in result.circles:
        xs += [c.center.x - c.radius, c.center.x + c.radius]
        ys += [c.center.y - c.radius, c.center.y + c.radius]
    w, h = max(xs) - min(xs), max(ys) - min(ys)
    size = max(w, h) or 1.0
    margin = 0.1 * size
    vb_x, vb_y = min(xs) - margin, -max(ys) - margin
    vb_w, vb_h = w + 2 * margin, h + 2 * margin
    stroke = 0.004 * size
    dot = 0.012 * size

    out: List[str] = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{_f(vb_x)} {_f(vb_y)} {_f(vb_w)} {_f(vb_h)}">',
        f"<title>Fermat point: {result.classification}</title>",
    ]
    pts = " ".join(f"{_f(v.x)},{_f(-v.y)}" for v in t.vertices)
    out.append(
        f'<polygon id="triangle" points="{pts}" fill="none" stroke="black" '
        f'stroke-width="{_f(stroke)}"/>'
    )
    for i, c in enumerate(result.circles, start=1):
        out.append(
            f'<circle id="torricelli-circle-{i}" cx="{_f(c.center.x)}" cy="{_f(-c.center.y)}" '
            f'r="{_f(c.radius)}" fill="none" stroke="steelblue" '
            f'stroke-width="{_f(stroke)}" stroke-dasharray="{_f(4 * stroke)}"/>'
        )
        out.append(
            f'<circle id="torricelli-center-{i}" cx="{_f(c.center.x)}" cy="{_f(-c.center.y)}" '
            f'r="{_f(dot * 0.75)}" fill="steelblue"/>'
        )
    for i, v in enumerate(t.vertices, start=1):
        out.append(
            f'<line id="segment-{i}" x1="{_f(fp.x)}" y1="{_f(-fp.y)}" '
            f'x2="{_f(v.x)}" y2="{_f(-v.y)}" stroke="darkred" stroke-width="{_f(stroke)}"/>'
        )
    for i, v in enumerate(t.vertices, start=1):
        out.append(f'<circle id="vertex-{i}" cx="{_f(v.x)}" cy="{_f(-v.y)}" r="{_f(dot)}" fill="black"/>')
        out.append(
            f'<text x="{_f(v.x + dot)}" y="{_f(-v.y - dot)}" font-size="{_f(4 * dot)}" '
            f'font-family="sans-serif">P{i}</text>'
        )
    out.append(f'<circle id="fermat-point" cx="{_f(fp.x)}" cy="{_f(-fp.y)}" r="{_f(dot)}" fill="red"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def emit_svg(t: Triangle, result: SolverResult, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(render_svg(t, result))
