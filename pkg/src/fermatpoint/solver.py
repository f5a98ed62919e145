"""Closed-form Fermat point of a triangle, with a certificate attached.

If some interior angle is at least 2*pi/3 the answer is that vertex. Otherwise
it is the isogonic point, found as the second intersection of two Torricelli
circles: circles through a pair of vertices on which the chord is seen at an
inscribed angle of 2*pi/3.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Optional, Tuple

from .errors import (
    CoincidentVertices,
    CollinearOpposite,
    DegenerateSide,
    NotAllAnglesBelowThreshold,
    NumericalDegeneracy,
)
from .geometry import (
    DEFAULT_CLASSIFICATION_TOLERANCE,
    Circle,
    Classification,
    Kind,
    Point2,
    Triangle,
    angle_at,
    barycentric,
    circle_circle_intersection,
    classify,
    interior_angles,
    signed_area2,
)
from .objective import total_distance, unit_vector_residual, vertex_optimality_margin
from .oracle import weiszfeld

log = logging.getLogger(__name__)

_SQRT3 = math.sqrt(3.0)
_BARYCENTRIC_TOL = 1e-9
_ILL_CONDITIONED_ANGLE = 1e-9

COLLINEAR_NOTE = (
    "degenerate input (collinear vertices): returned the middle vertex, "
    "the minimizer of the distance sum for points on a line"
)
COINCIDENT_NOTE = (
    "degenerate input (coincident vertices): returned the repeated point, "
    "the minimizer of the distance sum for this multiset"
)


@dataclass(frozen=True, slots=True)
class SolverConfig:
    classification_tolerance: float = DEFAULT_CLASSIFICATION_TOLERANCE
    residual_tolerance: float = 1e-9
    oracle_check: bool = True

    def __post_init__(self) -> None:
        if not (self.classification_tolerance > 0.0 and self.residual_tolerance > 0.0):
            raise ValueError("tolerances must be positive")


@dataclass(frozen=True, slots=True)
class Diagnostics:
    """Certificate data for a solution.

    ``residual_norm`` and ``angles_at_solution`` are ``None`` when the
    solution is a vertex, where the unit-vector sum is undefined.
    ``angles_at_solution`` holds the angles P1-F-P2, P2-F-P3 and P3-F-P1.
    A margin is ``None`` when another vertex coincides with that one.
    """

    residual_norm: Optional[float]
    angles_at_solution: Optional[Tuple[float, float, float]]
    vertex_margins: Tuple[Optional[float], Optional[float], Optional[float]]
    oracle_distance: Optional[float]
    warnings: Tuple[str, ...] = ()


@dataclass(frozen=True, slots=True)
class SolverResult:
    fermat_point: Point2
    classification: Classification
    total: float
    diagnostics: Diagnostics
    # Torricelli circles used to build an interior solution; empty otherwise.
    circles: Tuple[Circle, ...] = field(default=())

    @property
    def note(self) -> Optional[str]:
        if self.classification.kind is Kind.DEGENERATE_COLLINEAR:
            return COLLINEAR_NOTE
        if self.classification.kind is Kind.DEGENERATE_COINCIDENT:
            return COINCIDENT_NOTE
        return None


def torricelli_circle(side_a: Point2, side_b: Point2, opposite: Point2) -> Circle:
    """Circle through ``side_a`` and ``side_b`` whose arc on the side of
    ``opposite`` sees the chord at 2*pi/3.

    The centre sits on the perpendicular bisector, c/(2*sqrt(3)) from the
    midpoint and on the far side of the chord from ``opposite``; the radius
    is c/sqrt(3), c being the chord length.
    """
    if side_a == side_b:
        raise DegenerateSide("chord endpoints coincide")
    side = signed_area2(side_a, side_b, opposite)
    if side == 0.0:
        raise CollinearOpposite("opposite point lies on the chord line")
    dx, dy = side_b.x - side_a.x, side_b.y - side_a.y
    chord = math.hypot(dx, dy)
    # Left normal of a->b, scaled to the centre offset c/(2*sqrt(3)).
    s = 1.0 / (2.0 * _SQRT3)
    nx, ny = -dy * s, dx * s
    if side > 0.0:
        nx, ny = -nx, -ny
    mx, my = (side_a.x + side_b.x) / 2.0, (side_a.y + side_b.y) / 2.0
    return Circle(Point2(mx + nx, my + ny), chord / _SQRT3)


def _construct(t: Triangle, shared: int) -> Tuple[Point2, Circle, Circle]:
    verts = t.vertices
    s = shared - 1
    a, b = verts[(s + 1) % 3], verts[(s + 2) % 3]
    apex = verts[s]
    c1 = torricelli_circle(a, apex, b)
    c2 = torricelli_circle(apex, b, a)
    pts = circle_circle_intersection(c1, c2)
    if not pts:
        raise NumericalDegeneracy("Torricelli circles failed to intersect")
    # One intersection is the shared vertex itself; keep the other.
    cand = max(pts, key=lambda p: (p.distance(apex), p.as_tuple()))
    if min(barycentric(cand, t)) <= -_BARYCENTRIC_TOL:
        raise NumericalDegeneracy(f"intersection {cand} is not inside the triangle")
    return cand, c1, c2


def _canonical(t: Triangle) -> Triangle:
    return Triangle(*sorted(t.vertices, key=Point2.as_tuple))


def isogonic_construction(
    t: Triangle,
    shared: Optional[int] = None,
    classification_tolerance: float = DEFAULT_CLASSIFICATION_TOLERANCE,
) -> Tuple[Point2, Circle, Circle]:
    """Isogonic point plus the two Torricelli circles that locate it.

    The circles are erected on the two sides meeting at vertex ``shared``
    (1-based label of ``t``). By default the vertex with the smallest
    interior angle is used, which keeps the isogonic point far from the
    shared intersection and the two roots well separated. Vertex order is
    canonicalized first so relabelling the triangle cannot change the result.
    """
    c = classify(t, classification_tolerance)
    if c.kind is not Kind.ALL_ANGLES_BELOW:
        raise NotAllAnglesBelowThreshold(f"triangle classified as {c}")
    if shared is None:
        ct = _canonical(t)
        angles = interior_angles(ct)
        shared = min(range(3), key=lambda i: angles[i]) + 1
        return _construct(ct, shared)
    t.vertex(shared)
    return _construct(t, shared)


def isogonic_point(
    t: Triangle,
    shared: Optional[int] = None,
    classification_tolerance: float = DEFAULT_CLASSIFICATION_TOLERANCE,
) -> Point2:
    """The interior point from which every side subtends 2*pi/3."""
    return isogonic_construction(t, shared, classification_tolerance)[0]


def _collinear_median(t: Triangle) -> Point2:
    a, b, c = t.vertices
    dx, dy = c.x - a.x, c.y - a.y
    if dx == 0.0 and dy == 0.0:
        dx, dy = b.x - a.x, b.y - a.y
    ordered = sorted(t.vertices, key=lambda p: ((p.x - a.x) * dx + (p.y - a.y) * dy, p.as_tuple()))
    return ordered[1]


def _coincident_median(t: Triangle) -> Point2:
    a, b, c = t.vertices
    if a == b or a == c:
        return a
    return b


def _margins(t: Triangle) -> Tuple[Optional[float], ...]:
    out = []
    for i in (1, 2, 3):
        try:
            out.append(vertex_optimality_margin(i, t))
        except CoincidentVertices:
            out.append(None)
    return tuple(out)


def point_diagnostics(
    p: Point2,
    t: Triangle,
    oracle_distance: Optional[float] = None,
    warnings: Tuple[str, ...] = (),
) -> Diagnostics:
    """Residual, angles and margins for an arbitrary candidate point."""
    if p in t.vertices:
        residual = angles = None
    else:
        residual = unit_vector_residual(p, t).norm
        a, b, c = t.vertices
        angles = (angle_at(p, a, b), angle_at(p, b, c), angle_at(p, c, a))
    return Diagnostics(residual, angles, _margins(t), oracle_distance, warnings)


def fermat_point(t: Triangle, cfg: SolverConfig = SolverConfig()) -> SolverResult:
    """Minimizer of the distance sum to the vertices of ``t``.

    Never raises for finite input: degenerate triangles are answered with the
    minimizer of the distance sum for the degenerate point set and flagged in
    the classification.
    """
    cls = classify(t, cfg.classification_tolerance)
    circles: Tuple[Circle, ...] = ()
    warnings = []

    if cls.kind is Kind.WIDE_ANGLE_AT_VERTEX:
        point = t.vertex(cls.index)
    elif cls.kind is Kind.ALL_ANGLES_BELOW:
        point, c1, c2 = isogonic_construction(t, None, cfg.classification_tolerance)
        circles = (c1, c2)
    elif cls.kind is Kind.DEGENERATE_COLLINEAR:
        point = _collinear_median(t)
    else:
        point = _coincident_median(t)

    if not cls.is_degenerate and min(interior_angles(t)) < _ILL_CONDITIONED_ANGLE:
        warnings.append("ill-conditioned: smallest interior angle below 1e-9 rad")

    oracle_distance = None
    diam = t.diameter()
    if cfg.oracle_check and cls.kind is not Kind.DEGENERATE_COINCIDENT:
        report = weiszfeld(t)
        oracle_distance = point.distance(report.point)
        if oracle_distance > 1e-7 * (1.0 + diam):
            msg = f"oracle disagreement: Weiszfeld point is {oracle_distance:.3g} away"
            if not report.converged:
                msg += " (Weiszfeld did not converge)"
            warnings.append(msg)
            log.warning("%s for %s", msg, t)

    diag = point_diagnostics(point, t, oracle_distance, tuple(warnings))
    if (
        cls.kind is Kind.ALL_ANGLES_BELOW
        and diag.residual_norm is not None
        and diag.residual_norm > cfg.residual_tolerance
    ):
        msg = f"residual {diag.residual_norm:.3g} exceeds tolerance {cfg.residual_tolerance:.3g}"
        log.warning("%s for %s", msg, t)
        diag = Diagnostics(
            diag.residual_norm,
            diag.angles_at_solution,
            diag.vertex_margins,
            diag.oracle_distance,
            diag.warnings + (msg,),
        )
    return SolverResult(point, cls, total_distance(point, t), diag, circles)
