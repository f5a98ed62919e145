import itertools
import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import APEX_120, APEX_130, EQUILATERAL, RIGHT_345, SQRT3, map_triangle, random_triangle, rigid, triangles
from fermatpoint.errors import CollinearOpposite, DegenerateSide, NotAllAnglesBelowThreshold
from fermatpoint.geometry import TWO_PI_OVER_THREE, Kind, Point2, Triangle, angle_at, barycentric, classify, interior_angles
from fermatpoint.objective import total_distance, unit_vector_residual, vertex_optimality_margin
from fermatpoint.solver import (
    COLLINEAR_NOTE,
    SolverConfig,
    fermat_point,
    isogonic_construction,
    isogonic_point,
    torricelli_circle,
)

FAST = SolverConfig(oracle_check=False)
# Isogonic point of the 3-4-5 triangle from a 40-digit mpmath Weiszfeld run.
ISOGONIC_345 = (0.69578853408755421401, 0.75117610650515509582)


def _arc_points(circle, a, b, side_sign, n=20):
    """Points on the circle strictly on the ``side_sign`` side of chord ab."""
    out = []
    for k in range(4 * n):
        th = 2 * math.pi * (k + 0.5) / (4 * n)
        p = Point2(circle.center.x + circle.radius * math.cos(th), circle.center.y + circle.radius * math.sin(th))
        s = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x)
        if s * side_sign > 1e-9:
            out.append(p)
    return out[:n]


class TestTorricelliCircle:
    def test_upper_arc(self):
        a, b = Point2(0, 0), Point2(1, 0)
        c = torricelli_circle(a, b, Point2(0.5, 1))
        assert c.center.as_tuple() == pytest.approx((0.5, -1 / (2 * SQRT3)), abs=1e-15)
        assert c.radius == pytest.approx(1 / SQRT3, abs=1e-15)
        arc = _arc_points(c, a, b, +1)
        assert len(arc) == 20
        for p in arc:
            assert abs(angle_at(p, a, b) - TWO_PI_OVER_THREE) <= 1e-9

    def test_lower_arc(self):
        a, b = Point2(0, 0), Point2(2, 0)
        c = torricelli_circle(a, b, Point2(1, -5))
        assert c.center.as_tuple() == pytest.approx((1, 1 / SQRT3), abs=1e-15)
        assert c.radius == pytest.approx(2 / SQRT3, abs=1e-15)
        for p in _arc_points(c, a, b, -1):
            assert abs(angle_at(p, a, b) - TWO_PI_OVER_THREE) <= 1e-9

    @given(st.floats(0, 2 * math.pi))
    def test_rotation_equivariance(self, theta):
        move = rigid(theta, 0.0, 0.0)
        a, b, o = Point2(0.3, -1.2), Point2(2.5, 0.7), Point2(0.1, 3.0)
        c0 = torricelli_circle(a, b, o)
        c1 = torricelli_circle(move(a), move(b), move(o))
        assert c1.center.distance(move(c0.center)) <= 1e-12
        assert c1.radius == pytest.approx(c0.radius, abs=1e-12)

    def test_errors(self):
        with pytest.raises(DegenerateSide):
            torricelli_circle(Point2(1, 1), Point2(1, 1), Point2(0, 0))
        with pytest.raises(CollinearOpposite):
            torricelli_circle(Point2(0, 0), Point2(1, 0), Point2(5, 0))


class TestIsogonicPoint:
    def test_equilateral(self):
        p = isogonic_point(EQUILATERAL)
        assert p.as_tuple() == pytest.approx((0.5, SQRT3 / 6), abs=1e-12)

    def test_345(self):
        p = isogonic_point(RIGHT_345)
        assert p.as_tuple() == pytest.approx(ISOGONIC_345, abs=1e-10)
        a, b, c = RIGHT_345.vertices
        for u, v in ((a, b), (b, c), (c, a)):
            assert abs(angle_at(p, u, v) - TWO_PI_OVER_THREE) <= 1e-9

    def test_every_circle_pair_gives_same_point(self, rng):
        n = 0
        while n < 300:
            t = random_triangle(rng)
            if classify(t).kind is not Kind.ALL_ANGLES_BELOW or max(interior_angles(t)) > TWO_PI_OVER_THREE - 1e-3:
                continue
            n += 1
            pts = [isogonic_point(t, shared=i) for i in (1, 2, 3)]
            for p, q in itertools.combinations(pts, 2):
                assert p.distance(q) <= 1e-9 * (1 + t.diameter())

    def test_construction_returns_interior_point_and_circles(self):
        p, c1, c2 = isogonic_construction(RIGHT_345)
        assert min(barycentric(p, RIGHT_345)) > 0
        for c in (c1, c2):
            assert abs(p.distance(c.center) - c.radius) <= 1e-12 * c.radius

    def test_rejects_wide_triangle(self):
        with pytest.raises(NotAllAnglesBelowThreshold):
            isogonic_point(APEX_130)


class TestFermatPoint:
    def test_equilateral(self):
        r = fermat_point(EQUILATERAL)
        assert r.classification.kind is Kind.ALL_ANGLES_BELOW
        assert r.fermat_point.as_tuple() == pytest.approx((0.5, SQRT3 / 6), abs=1e-12)
        assert r.total == pytest.approx(SQRT3, abs=1e-12)
        assert len(r.circles) == 2
        assert r.diagnostics.oracle_distance <= 1e-7
        assert r.diagnostics.warnings == ()
        assert r.note is None

    def test_wide_apex(self):
        r = fermat_point(APEX_130)
        assert r.classification.kind is Kind.WIDE_ANGLE_AT_VERTEX and r.classification.index == 1
        assert r.fermat_point == Point2(0.0, 0.0)
        assert r.total == pytest.approx(2.0, abs=1e-15)
        assert r.diagnostics.residual_norm is None and r.diagnostics.angles_at_solution is None
        assert r.circles == ()

    def test_boundary_apex_is_vertex_case(self):
        r = fermat_point(APEX_120)
        assert r.classification.kind is Kind.WIDE_ANGLE_AT_VERTEX and r.classification.index == 1
        assert r.fermat_point == APEX_120.p1

    def test_collinear(self):
        r = fermat_point(Triangle.from_coords(2, 0, 0, 0, 1, 0))
        assert r.classification.kind is Kind.DEGENERATE_COLLINEAR
        assert r.fermat_point == Point2(1, 0)
        assert r.total == 2.0
        assert r.note == COLLINEAR_NOTE
        assert r.diagnostics.oracle_distance <= 1e-9

    @pytest.mark.parametrize(
        "coords, expected",
        [((0, 0, 3, 4, 0, 0), (0, 0)), ((3, 4, 1, 1, 1, 1), (1, 1)), ((5, 5, 5, 5, 5, 5), (5, 5))],
    )
    def test_coincident(self, coords, expected):
        r = fermat_point(Triangle.from_coords(*coords))
        assert r.classification.kind is Kind.DEGENERATE_COINCIDENT
        assert r.fermat_point == Point2(*expected)
        assert r.note is not None

    def test_total_matches_objective(self, rng):
        for _ in range(500):
            t = random_triangle(rng)
            r = fermat_point(t, FAST)
            assert r.total == pytest.approx(total_distance(r.fermat_point, t), rel=1e-12)

    def test_margins_in_diagnostics(self, rng):
        for _ in range(200):
            t = random_triangle(rng)
            r = fermat_point(t, FAST)
            for m, alpha in zip(r.diagnostics.vertex_margins, interior_angles(t)):
                assert m == pytest.approx(2 * math.cos(alpha / 2), abs=1e-12)

    def test_vertex_certificate(self, rng):
        for _ in range(2000):
            t = random_triangle(rng)
            r = fermat_point(t, FAST)
            for i in (1, 2, 3):
                m = vertex_optimality_margin(i, t)
                if r.classification.index == i:
                    assert m <= 1 + 1e-12
                else:
                    assert m > 1

    def test_global_minimality(self, rng):
        for _ in range(30):
            t = random_triangle(rng)
            r = fermat_point(t, FAST)
            scale = 1 + t.diameter()
            for _ in range(1000):
                q = Point2(rng.uniform(-12, 12), rng.uniform(-12, 12))
                assert r.total <= total_distance(q, t) + 1e-9 * scale
            # Also probe a tight neighbourhood, where a wrong answer would show first.
            for _ in range(200):
                q = Point2(r.fermat_point.x + rng.gauss(0, 1e-3), r.fermat_point.y + rng.gauss(0, 1e-3))
                assert r.total <= total_distance(q, t) + 1e-9 * scale

    @settings(max_examples=200, deadline=None)
    @given(triangles(), st.floats(0, 2 * math.pi), st.floats(-100, 100), st.floats(-100, 100), st.floats(0.01, 100))
    def test_equivariance(self, t, theta, dx, dy, s):
        if abs(max(interior_angles(t)) - TWO_PI_OVER_THREE) < 1e-9:
            return
        r = fermat_point(t, FAST)
        move = rigid(theta, dx, dy)
        moved = fermat_point(map_triangle(move, t), FAST)
        assert moved.fermat_point.distance(move(r.fermat_point)) <= 1e-9 * (1 + t.diameter() + abs(dx) + abs(dy))
        scaled = fermat_point(map_triangle(lambda p: Point2(s * p.x, s * p.y), t), FAST)
        assert scaled.total == pytest.approx(s * r.total, rel=1e-12)
        assert scaled.fermat_point.distance(Point2(s * r.fermat_point.x, s * r.fermat_point.y)) <= 1e-9 * s * (1 + t.diameter())

    def test_label_invariance(self, rng):
        for _ in range(500):
            t = random_triangle(rng)
            ref = fermat_point(t, FAST).fermat_point
            for perm in itertools.permutations(t.vertices):
                assert fermat_point(Triangle(*perm), FAST).fermat_point.distance(ref) <= 1e-12

    def test_oracle_check_records_distance(self):
        r = fermat_point(RIGHT_345)
        assert r.diagnostics.oracle_distance <= 1e-7 * (1 + RIGHT_345.diameter())
        assert fermat_point(RIGHT_345, FAST).diagnostics.oracle_distance is None

    def test_rejects_nonpositive_tolerances(self):
        with pytest.raises(ValueError):
            SolverConfig(residual_tolerance=0.0)


def _needle(rng):
    angle = 10 ** rng.uniform(-6, 0)
    th = rng.uniform(0, 2 * math.pi)
    ax, ay = rng.uniform(-10, 10), rng.uniform(-10, 10)
    r1, r2 = rng.uniform(0.1, 10), rng.uniform(0.1, 10)
    return Triangle.from_coords(
        ax, ay, ax + r1 * math.cos(th), ay + r1 * math.sin(th), ax + r2 * math.cos(th + angle), ay + r2 * math.sin(th + angle)
    )


def test_never_fails_on_nondegenerate_input():
    rng = random.Random(8)
    for k in range(100_000):
        t = _needle(rng) if k % 2 else random_triangle(rng)
        r = fermat_point(t, FAST)
        if r.classification.kind is Kind.ALL_ANGLES_BELOW:
            assert r.diagnostics.residual_norm <= 1e-9
            assert unit_vector_residual(r.fermat_point, t).norm <= 1e-9
