"""The distance-sum objective, its gradient and the vertex optimality margin."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .errors import CoincidentVertices, EvaluatedAtVertex, StepTooLarge
from .geometry import Point2, Triangle


@dataclass(frozen=True, slots=True)
class GradientValue:
    gx: float
    gy: float

    def norm(self) -> float:
        return math.hypot(self.gx, self.gy)


@dataclass(frozen=True, slots=True)
class ResidualValue:
    """Sum of the three unit vectors pointing from the vertices to a point."""

    rx: float
    ry: float
    norm: float


def total_distance(p: Point2, t: Triangle) -> float:
    """Sum of Euclidean distances from ``p`` to the three vertices."""
    return p.distance(t.p1) + p.distance(t.p2) + p.distance(t.p3)


def _check_not_vertex(p: Point2, t: Triangle) -> None:
    for i, v in enumerate(t.vertices, start=1):
        if p == v:
            raise EvaluatedAtVertex(i)


def gradient(p: Point2, t: Triangle) -> GradientValue:
    """Partial derivatives of :func:`total_distance` with respect to x and y.

    Raises :class:`EvaluatedAtVertex` when ``p`` is bitwise equal to a vertex;
    arbitrarily close points are fine.
    """
    _check_not_vertex(p, t)
    gx = gy = 0.0
    for v in t.vertices:
        dx, dy = p.x - v.x, p.y - v.y
        r = math.hypot(dx, dy)
        gx += dx / r
        gy += dy / r
    return GradientValue(gx, gy)


def unit_vector_residual(p: Point2, t: Triangle) -> ResidualValue:
    """The unit-vector form of the stationarity condition, evaluated at ``p``.

    Numerically the same sum as :func:`gradient`, written as a sum of
    normalized displacement vectors. It vanishes exactly when the three unit
    vectors are pairwise 2*pi/3 apart.
    """
    _check_not_vertex(p, t)
    rx = ry = 0.0
    for v in t.vertices:
        lx, ly = p.x - v.x, p.y - v.y
        length = math.hypot(lx, ly)
        rx += lx / length
        ry += ly / length
    return ResidualValue(rx, ry, math.hypot(rx, ry))


def vertex_optimality_margin(i: int, t: Triangle) -> float:
    """|u_j + u_k| for the unit vectors from vertex ``i`` to the other two.

    Equals 2*cos(alpha/2) with alpha the interior angle at vertex ``i``
    (1-based). A margin of at most 1 means the vertex is the minimizer; above
    1 the gradient has a nonzero limit there and the vertex is not even a
    local minimum.
    """
    others = [v for k, v in enumerate(t.vertices, start=1) if k != i]
    apex = t.vertex(i)
    sx = sy = 0.0
    for v in others:
        dx, dy = v.x - apex.x, v.y - apex.y
        r = math.hypot(dx, dy)
        if r == 0.0:
            raise CoincidentVertices(f"a vertex coincides with vertex {i}")
        sx += dx / r
        sy += dy / r
    return math.hypot(sx, sy)


def default_step(t: Triangle) -> float:
    return 1e-6 * (1.0 + t.diameter())


def finite_difference_gradient(
    p: Point2, t: Triangle, h: Optional[float] = None
) -> GradientValue:
    """Central-difference estimate of the gradient with step ``h``."""
    if h is None:
        h = default_step(t)
    if not h > 0.0:
        raise ValueError("step h must be positive")
    for i, v in enumerate(t.vertices, start=1):
        if p.distance(v) <= 2.0 * h:
            raise StepTooLarge(f"vertex {i} lies within 2h = {2.0 * h!r} of the point")
    f = total_distance
    gx = (f(Point2(p.x + h, p.y), t) - f(Point2(p.x - h, p.y), t)) / (2.0 * h)
    gy = (f(Point2(p.x, p.y + h), t) - f(Point2(p.x, p.y - h), t)) / (2.0 * h)
    return GradientValue(gx, gy)
