"""Plane geometry primitives: points, vectors, triangles, circles and predicates.

Everything here works in plain double precision. Orientation and coincidence
tests compare exactly (no epsilon), so degeneracy is reported for the inputs
as given rather than for some rounded neighbourhood of them.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple

from .errors import CoincidentCircles, CoincidentPoints, ConcentricCircles

TWO_PI_OVER_THREE = 2.0 * math.pi / 3.0

# Default slack (radians) when comparing an interior angle against 2*pi/3.
DEFAULT_CLASSIFICATION_TOLERANCE = 1e-12

_UNIT_NORM_TOL = 1e-12
_TANGENCY_TOL = 1e-9


def _require_finite(name: str, *values: float) -> None:
    for v in values:
        if not math.isfinite(v):
            raise ValueError(f"{name} requires finite components, got {v!r}")


@dataclass(frozen=True, slots=True)
class Vec2:
    dx: float
    dy: float

    def __post_init__(self) -> None:
        _require_finite("Vec2", self.dx, self.dy)

    def __add__(self, other: Vec2) -> Vec2:
        return Vec2(self.dx + other.dx, self.dy + other.dy)

    def __sub__(self, other: Vec2) -> Vec2:
        return Vec2(self.dx - other.dx, self.dy - other.dy)

    def __mul__(self, s: float) -> Vec2:
        return Vec2(self.dx * s, self.dy * s)

    __rmul__ = __mul__

    def __neg__(self) -> Vec2:
        return Vec2(-self.dx, -self.dy)

    def norm(self) -> float:
        return math.hypot(self.dx, self.dy)

    def dot(self, other: Vec2) -> float:
        return self.dx * other.dx + self.dy * other.dy

    def cross(self, other: Vec2) -> float:
        return self.dx * other.dy - self.dy * other.dx


@dataclass(frozen=True, slots=True)
class UnitVec2(Vec2):
    """A direction. Build with :meth:`UnitVec2.of`, which normalizes."""

    def __post_init__(self) -> None:
        _require_finite("UnitVec2", self.dx, self.dy)
        if abs(self.dx * self.dx + self.dy * self.dy - 1.0) > _UNIT_NORM_TOL:
            raise ValueError(f"not a unit vector: ({self.dx!r}, {self.dy!r})")

    @classmethod
    def of(cls, dx: float, dy: float) -> UnitVec2:
        n = math.hypot(dx, dy)
        if n == 0.0:
            raise ValueError("cannot normalize the zero vector")
        return cls(dx / n, dy / n)


@dataclass(frozen=True, slots=True)
class Point2:
    x: float
    y: float

    def __post_init__(self) -> None:
        _require_finite("Point2", self.x, self.y)

    def __sub__(self, other: Point2) -> Vec2:
        return Vec2(self.x - other.x, self.y - other.y)

    def __add__(self, v: Vec2) -> Point2:
        return Point2(self.x + v.dx, self.y + v.dy)

    def distance(self, other: Point2) -> float:
        return math.hypot(self.x - other.x, self.y - other.y)

    def as_tuple(self) -> Tuple[float, float]:
        return (self.x, self.y)


@dataclass(frozen=True, slots=True)
class Triangle:
    """Three labelled vertices. Any three points are accepted; see :func:`classify`."""

    p1: Point2
    p2: Point2
    p3: Point2

    @classmethod
    def from_coords(cls, *coords: float) -> Triangle:
        if len(coords) != 6:
            raise ValueError(f"expected 6 coordinates, got {len(coords)}")
        c = [float(v) for v in coords]
        return cls(Point2(c[0], c[1]), Point2(c[2], c[3]), Point2(c[4], c[5]))

    @property
    def vertices(self) -> Tuple[Point2, Point2, Point2]:
        return (self.p1, self.p2, self.p3)

    def __iter__(self) -> Iterator[Point2]:
        return iter(self.vertices)

    def vertex(self, index: int) -> Point2:
        """Vertex by 1-based label."""
        if index not in (1, 2, 3):
            raise IndexError(f"vertex index must be 1, 2 or 3, got {index!r}")
        return self.vertices[index - 1]

    def diameter(self) -> float:
        a, b, c = self.vertices
        return max(a.distance(b), b.distance(c), c.distance(a))

    def centroid(self) -> Point2:
        a, b, c = self.vertices
        return Point2((a.x + b.x + c.x) / 3.0, (a.y + b.y + c.y) / 3.0)


@dataclass(frozen=True, slots=True)
class Circle:
    center: Point2
    radius: float

    def __post_init__(self) -> None:
        _require_finite("Circle", self.radius)
        if self.radius < 0.0:
            raise ValueError(f"negative radius {self.radius!r}")


class Kind(enum.Enum):
    ALL_ANGLES_BELOW = "AllAnglesBelowTwoPiOverThree"
    WIDE_ANGLE_AT_VERTEX = "WideAngleAtVertex"
    DEGENERATE_COLLINEAR = "DegenerateCollinear"
    DEGENERATE_COINCIDENT = "DegenerateCoincident"


@dataclass(frozen=True, slots=True)
class Classification:
    """Which case of the Fermat-point characterization a triangle falls in.

    ``index`` is the 1-based label of the wide-angle vertex and is set only
    for :attr:`Kind.WIDE_ANGLE_AT_VERTEX`.
    """

    kind: Kind
    index: Optional[int] = None

    def __post_init__(self) -> None:
        if (self.kind is Kind.WIDE_ANGLE_AT_VERTEX) != (self.index is not None):
            raise ValueError("index is required exactly for WideAngleAtVertex")
        if self.index is not None and self.index not in (1, 2, 3):
            raise ValueError(f"bad vertex index {self.index!r}")

    @property
    def is_degenerate(self) -> bool:
        return self.kind in (Kind.DEGENERATE_COLLINEAR, Kind.DEGENERATE_COINCIDENT)

    def __str__(self) -> str:
        if self.index is None:
            return self.kind.value
        return f"{self.kind.value}({self.index})"


ALL_ANGLES_BELOW = Classification(Kind.ALL_ANGLES_BELOW)
DEGENERATE_COLLINEAR = Classification(Kind.DEGENERATE_COLLINEAR)
DEGENERATE_COINCIDENT = Classification(Kind.DEGENERATE_COINCIDENT)


def wide_angle_at(index: int) -> Classification:
    return Classification(Kind.WIDE_ANGLE_AT_VERTEX, index)


def signed_area2(a: Point2, b: Point2, c: Point2) -> float:
    """Twice the signed area of triangle abc, positive when counterclockwise."""
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)


def angle_at(vertex: Point2, a: Point2, b: Point2) -> float:
    """Angle a-vertex-b in radians, in [0, pi].

    Uses atan2(|cross|, dot), which keeps full relative precision near 0 and
    near pi where arccos of a normalized dot product does not.
    """
    if vertex == a or vertex == b:
        raise CoincidentPoints(f"angle at {vertex} is undefined: arm endpoint coincides")
    ux, uy = a.x - vertex.x, a.y - vertex.y
    vx, vy = b.x - vertex.x, b.y - vertex.y
    return math.atan2(abs(ux * vy - uy * vx), ux * vx + uy * vy)


def interior_angles(t: Triangle) -> Tuple[float, float, float]:
    """Interior angles at p1, p2, p3. Vertices must be pairwise distinct."""
    a, b, c = t.vertices
    return (angle_at(a, b, c), angle_at(b, c, a), angle_at(c, a, b))


def barycentric(p: Point2, t: Triangle) -> Tuple[float, float, float]:
    a, b, c = t.vertices
    area = signed_area2(a, b, c)
    if area == 0.0:
        raise ValueError("barycentric coordinates need a nondegenerate triangle")
    return (
        signed_area2(p, b, c) / area,
        signed_area2(a, p, c) / area,
        signed_area2(a, b, p) / area,
    )


def classify(
    t: Triangle, classification_tolerance: float = DEFAULT_CLASSIFICATION_TOLERANCE
) -> Classification:
    """Place ``t`` in the vertex case, the interior case, or a degenerate case.

    An angle within ``classification_tolerance`` below 2*pi/3 counts as wide:
    the boundary belongs to the vertex case.
    """
    if classification_tolerance < 0.0:
        raise ValueError("classification_tolerance must be nonnegative")
    a, b, c = t.vertices
    if a == b or b == c or c == a:
        return DEGENERATE_COINCIDENT
    if signed_area2(a, b, c) == 0.0:
        return DEGENERATE_COLLINEAR
    angles = interior_angles(t)
    widest = max(range(3), key=lambda i: angles[i])
    if angles[widest] >= TWO_PI_OVER_THREE - classification_tolerance:
        return wide_angle_at(widest + 1)
    return ALL_ANGLES_BELOW


def circle_circle_intersection(c1: Circle, c2: Circle) -> List[Point2]:
    """Intersection points of two circles, sorted by (x, y).

    A near miss, where the squared half-chord is negative but no larger in
    magnitude than 1e-9 * (r1 + r2)**2, is reported as one tangency point.
    """
    if c1.radius <= 0.0 or c2.radius <= 0.0:
        raise ValueError("circle_circle_intersection needs positive radii")
    if c1.center == c2.center:
        if c1.radius == c2.radius:
            raise CoincidentCircles("circles coincide; intersection is the whole circle")
        raise ConcentricCircles("concentric circles with different radii")

    r1, r2 = c1.radius, c2.radius
    ex, ey = c2.center.x - c1.center.x, c2.center.y - c1.center.y
    d = math.hypot(ex, ey)
    ux, uy = ex / d, ey / d
    # Signed distance from c1.center to the radical line, along the centre line.
    a = (d * d + r1 * r1 - r2 * r2) / (2.0 * d)
    h2 = r1 * r1 - a * a
    foot_x, foot_y = c1.center.x + a * ux, c1.center.y + a * uy

    if h2 < 0.0:
        if -h2 <= _TANGENCY_TOL * (r1 + r2) ** 2:
            return [Point2(foot_x, foot_y)]
        return []
    if h2 == 0.0:
        return [Point2(foot_x, foot_y)]
    h = math.sqrt(h2)
    pts = [
        Point2(foot_x - h * uy, foot_y + h * ux),
        Point2(foot_x + h * uy, foot_y - h * ux),
    ]
    return sorted(pts, key=Point2.as_tuple)
