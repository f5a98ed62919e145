import math
import random

import pytest
from hypothesis import assume
from hypothesis import strategies as st

from fermatpoint.geometry import Point2, Triangle, signed_area2

SQRT3 = math.sqrt(3.0)
EQUILATERAL = Triangle.from_coords(0.0, 0.0, 1.0, 0.0, 0.5, SQRT3 / 2.0)
RIGHT_345 = Triangle.from_coords(0.0, 0.0, 4.0, 0.0, 0.0, 3.0)
# Interior angle of 130 degrees at p1, both legs of unit length.
APEX_130 = Triangle.from_coords(
    0.0, 0.0, 1.0, 0.0, math.cos(13 * math.pi / 18), math.sin(13 * math.pi / 18)
)
APEX_120 = Triangle.from_coords(
    0.0, 0.0, 1.0, 0.0, math.cos(2 * math.pi / 3), math.sin(2 * math.pi / 3)
)


def random_triangle(rng: random.Random, lo: float = -10.0, hi: float = 10.0) -> Triangle:
    while True:
        t = Triangle.from_coords(*(rng.uniform(lo, hi) for _ in range(6)))
        if signed_area2(*t.vertices) != 0.0:
            return t


def random_interior_point(rng: random.Random, t: Triangle, floor: float = 0.01) -> Point2:
    """Uniform-ish interior point whose barycentric coordinates are all >= floor."""
    while True:
        a, b = rng.random(), rng.random()
        if a + b > 1.0:
            a, b = 1.0 - a, 1.0 - b
        w = (1.0 - a - b, a, b)
        if min(w) >= floor:
            return Point2(
                sum(wi * v.x for wi, v in zip(w, t.vertices)),
                sum(wi * v.y for wi, v in zip(w, t.vertices)),
            )


def rigid(theta: float, dx: float, dy: float):
    c, s = math.cos(theta), math.sin(theta)

    def move(p: Point2) -> Point2:
        return Point2(c * p.x - s * p.y + dx, s * p.x + c * p.y + dy)

    return move


def map_triangle(f, t: Triangle) -> Triangle:
    return Triangle(*(f(v) for v in t.vertices))


@pytest.fixture
def rng():
    return random.Random(20261016)


coord = st.floats(min_value=-100.0, max_value=100.0, allow_nan=False, allow_infinity=False)
points = st.builds(Point2, coord, coord)


@st.composite
def triangles(draw):
    t = Triangle(draw(points), draw(points), draw(points))
    a, b, c = t.vertices
    # Keep away from slivers so tolerances stay meaningful.
    area = abs(signed_area2(a, b, c))
    diam = t.diameter()
    assume(diam > 1e-3 and area > 1e-4 * diam * diam)
    return t


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
