"""Numerical minimizers of the distance sum, independent of the analytic solver.

Neither routine knows about Torricelli circles or the 2*pi/3 angle test; they
only evaluate distances. Agreement with :mod:`fermatpoint.solver` is therefore
evidence that the closed-form construction is right.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .geometry import Point2, Triangle
from .objective import total_distance, vertex_optimality_margin

DEFAULT_STEP_TOLERANCE = 1e-12
DEFAULT_MAX_ITERATIONS = 10_000
DEFAULT_LEVELS = 12
DEFAULT_POINTS_PER_AXIS = 32

# An iterate this close to a vertex (relative to the diameter) is treated as
# having landed on it.
_SNAP = 1e-13
# Distance (relative to the diameter) to step off a vertex that is not optimal.
_DISPLACEMENT = 1e-9
# Cap on grid windows that slide without zooming, over a whole refinement.
_MAX_MOVES = 1000

Callback = Callable[[int, Point2, float], None]


@dataclass(frozen=True, slots=True)
class OracleReport:
    point: Point2
    value: float
    iterations_or_levels: int
    converged: bool


def _leave_or_stay(x: float, y: float, t: Triangle, diam: float):
    """Handle an iterate sitting on a vertex.

    Returns ``(point, done)``. If the vertex is optimal the point is the
    vertex itself and ``done`` is true; otherwise the point is nudged along
    the direction of steepest descent of the distance sum.
    """
    verts = t.vertices
    snap = _SNAP * diam
    here = [i for i, v in enumerate(verts) if math.hypot(x - v.x, y - v.y) <= snap]
    if not here:
        return None, False
    apex = verts[here[0]]
    others = [v for i, v in enumerate(verts) if i not in here]
    if not others:
        return apex, True
    sx = sy = 0.0
    for v in others:
        dx, dy = v.x - apex.x, v.y - apex.y
        r = math.hypot(dx, dy)
        sx += dx / r
        sy += dy / r
    if len(here) == 1:
        margin = vertex_optimality_margin(here[0] + 1, t)
    else:
        # Several coincident vertices pull with weight len(here).
        margin = math.hypot(sx, sy) / len(here)
    if margin <= 1.0:
        return apex, True
    s = math.hypot(sx, sy)
    step = _DISPLACEMENT * diam
    return Point2(apex.x + step * sx / s, apex.y + step * sy / s), False


def weiszfeld(
    t: Triangle,
    init: Optional[Point2] = None,
    step_tolerance: float = DEFAULT_STEP_TOLERANCE,
    max_iterations: int = DEFAULT_MAX_ITERATIONS,
    callback: Optional[Callback] = None,
) -> OracleReport:
    """Weiszfeld fixed-point iteration for the three-point geometric median.

    Stops once a step is no longer than ``step_tolerance * (1 + diameter)``.
    Iterates that land on a vertex are resolved with the vertex optimality
    margin instead of dividing by zero. ``callback(k, point, value)`` is called
    after every iteration.
    """
    if not step_tolerance > 0.0:
        raise ValueError("step_tolerance must be positive")
    if init is None:
        init = t.centroid()
    diam = t.diameter()
    if diam == 0.0:
        return OracleReport(t.p1, 0.0, 0, True)
    stop = step_tolerance * (1.0 + diam)
    anchors = [(v.x, v.y) for v in t.vertices]
    x, y = init.x, init.y

    for k in range(1, max_iterations + 1):
        landed, done = _leave_or_stay(x, y, t, diam)
        if landed is not None:
            if done:
                value = total_distance(landed, t)
                if callback is not None:
                    callback(k, landed, value)
                return OracleReport(landed, value, k, True)
            x, y = landed.x, landed.y

        sw = sx = sy = 0.0
        for ax, ay in anchors:
            w = 1.0 / math.hypot(x - ax, y - ay)
            sw += w
            sx += w * ax
            sy += w * ay
        nx, ny = sx / sw, sy / sw
        step = math.hypot(nx - x, ny - y)
        x, y = nx, ny
        if callback is not None:
            p = Point2(x, y)
            callback(k, p, total_distance(p, t))
        if step <= stop:
            p = Point2(x, y)
            return OracleReport(p, total_distance(p, t), k, True)

    p = Point2(x, y)
    return OracleReport(p, total_distance(p, t), max_iterations, False)


def grid_refine_minimize(
    t: Triangle,
    levels: int = DEFAULT_LEVELS,
    points_per_axis: int = DEFAULT_POINTS_PER_AXIS,
    callback: Optional[Callback] = None,
) -> OracleReport:
    """Brute-force minimization by repeatedly zooming a uniform grid.

    The first grid covers the bounding box of the triangle padded on every
    side by 10% of its larger extent. Each later level spans a quarter of the
    previous one and is centred on the best point found so far. The best
    point is kept across levels, so the reported value never increases.
    Ties go to the smallest (x, then y). When a level's best point sits on
    the edge of its window the window slides onto it at the same size before
    zooming continues; flat valleys near a wide-angle vertex otherwise drag
    the minimizer out of reach.
    """
    if levels < 1:
        raise ValueError("levels must be at least 1")
    if points_per_axis < 8:
        raise ValueError("points_per_axis must be at least 8")

    vx = np.array([v.x for v in t.vertices])
    vy = np.array([v.y for v in t.vertices])
    width, height = float(vx.max() - vx.min()), float(vy.max() - vy.min())
    pad = 0.1 * max(width, height)
    if pad == 0.0:
        pad = 1.0
    span_x, span_y = width + 2.0 * pad, height + 2.0 * pad
    cx, cy = float(vx.min() + vx.max()) / 2.0, float(vy.min() + vy.max()) / 2.0

    best: Optional[tuple] = None
    level = 0
    moves = 0
    while level < levels:
        gx = np.linspace(cx - span_x / 2.0, cx + span_x / 2.0, points_per_axis)
        gy = np.linspace(cy - span_y / 2.0, cy + span_y / 2.0, points_per_axis)
        # ij indexing flattens x-major, so argmin's first hit is the smallest (x, y).
        X, Y = np.meshgrid(gx, gy, indexing="ij")
        F = (
            np.hypot(X - vx[0], Y - vy[0])
            + np.hypot(X - vx[1], Y - vy[1])
            + np.hypot(X - vx[2], Y - vy[2])
        )
        k = int(np.argmin(F))
        cand = (float(F.flat[k]), float(X.flat[k]), float(Y.flat[k]))
        improved = best is None or cand < best
        if improved:
            best = cand
        value, cx, cy = best
        i, j = divmod(k, points_per_axis)
        edge = i in (0, points_per_axis - 1) or j in (0, points_per_axis - 1)
        if improved and edge and level > 0 and moves < _MAX_MOVES:
            # The minimizer may lie outside this window: slide, do not zoom.
            moves += 1
            continue
        level += 1
        if callback is not None:
            callback(level, Point2(cx, cy), value)
        span_x /= 4.0
        span_y /= 4.0

    value, bx, by = best
    p = Point2(bx, by)
    return OracleReport(p, total_distance(p, t), levels, True)
