import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from puzzlefonts.errors import DegenerateDisks, DisconnectedPath
from puzzlefonts.geometry import (
    CCW, CW, Arc, Point2, Segment, arc_contains_angle, arc_extent,
    arc_length, arc_start_point, arc_end_point, convex_hull, dist, dot,
    hull_perimeter, normalize_angle, path_is_simple, point_arc_distance,
    point_segment_distance, sub, tangent_points,
)
from oracles import polyline_is_simple_exact

SQRT3_2 = math.sqrt(3.0) / 2.0


def tangency_residuals(c, p, q):
    """Independent check: |p - c| vs 1 and radius-segment perpendicularity."""
    radial = sub(p, c)
    along = sub(q, p)
    return abs(dist(p, c) - 1.0), abs(dot(radial, along)) / dist(p, q)


class TestTangentPoints:
    def test_external_left(self):
        assert tangent_points((0, 0), (4, 0), "external", "left") == ((0, 1), (4, 1))

    def test_external_right_mirror(self):
        assert tangent_points((0, 0), (4, 0), "external", "right") == ((0, -1), (4, -1))

    def test_internal_left_derived(self):
        # analytic solution: touch angle acos(2/d) = 60 degrees for d = 4
        p1, p2 = tangent_points((0, 0), (4, 0), "internal", "left")
        assert p1 == pytest.approx((0.5, SQRT3_2), abs=1e-12)
        assert p2 == pytest.approx((3.5, -SQRT3_2), abs=1e-12)
        for c, a, b in (((0, 0), p1, p2), ((4, 0), p2, p1)):
            dr, dperp = tangency_residuals(c, a, b)
            assert dr < 1e-9 and dperp < 1e-9

    def test_degenerate(self):
        with pytest.raises(DegenerateDisks):
            tangent_points((0, 0), (0, 0), "external", "left")
        with pytest.raises(DegenerateDisks):
            tangent_points((0, 0), (1.5, 0), "internal", "left")

    @given(st.floats(2.001, 50), st.floats(0, 360),
           st.sampled_from(["external", "internal"]), st.sampled_from(["left", "right"]))
    @settings(max_examples=200)
    def test_tangency_property(self, d, ang, kind, side):
        c1 = Point2(0.0, 0.0)
        c2 = Point2(d * math.cos(math.radians(ang)), d * math.sin(math.radians(ang)))
        p1, p2 = tangent_points(c1, c2, kind, side)
        for c, a, b in ((c1, p1, p2), (c2, p2, p1)):
            dr, dperp = tangency_residuals(c, a, b)
            assert dr <= 1e-9
            assert dperp <= 1e-9

    def test_side_convention(self):
        # "left" means left of the directed center line
        p1, _ = tangent_points((0, 0), (10, 0), "external", "left")
        assert p1.y > 0
        p1, _ = tangent_points((10, 0), (0, 0), "external", "left")
        assert p1.y < 0


def _poly(points):
    return [Segment(Point2(*points[i]), Point2(*points[i + 1])) for i in range(len(points) - 1)]


class TestPathIsSimple:
    def test_square(self):
        assert path_is_simple(_poly([(0, 0), (1, 0), (1, 1), (0, 1), (0, 0)]))

    def test_figure_eight(self):
        assert not path_is_simple(_poly([(0, 0), (2, 2), (2, 0), (0, 2), (0, 0)]))

    def test_collinear_doubling_policy(self):
        doubled = _poly([(0, 0), (1, 0), (0, 0), (-1, 0)])
        assert path_is_simple(doubled, "allow_collinear")
        assert not path_is_simple(doubled, "forbid")
        overlap = _poly([(0, 0), (2, 0), (1, 1), (1, 0), (3, 0)])
        assert not path_is_simple(overlap, "forbid")

    def test_transversal_forbidden_even_with_allow(self):
        assert not path_is_simple(
            _poly([(0, 0), (2, 2), (2, 0), (0, 2), (0, 0)]), "allow_collinear")

    def test_disconnected(self):
        with pytest.raises(DisconnectedPath):
            path_is_simple([Segment(Point2(0, 0), Point2(1, 0)),
                            Segment(Point2(5, 5), Point2(6, 5))])

    def test_segment_arc_crossing(self):
        arc = Arc(Point2(0, 0), 1.0, 90.0, 270.0, CCW)
        # a chord through the left half-circle crosses the arc twice
        crossing = Segment(Point2(-2, 0.5), Point2(2, 0.5))
        assert _seg_arc_crosses(crossing, arc)
        # a segment fully right of the circle does not
        from puzzlefonts.geometry import _seg_arc_class, _NONE
        assert _seg_arc_class(Segment(Point2(2, -1), Point2(2, 1)), arc) == _NONE

    def test_arc_arc_same_circle_overlap(self):
        a1 = Arc(Point2(0, 0), 1.0, 0.0, 180.0, CCW)
        a2 = Arc(Point2(0, 0), 1.0, 90.0, 270.0, CCW)
        from puzzlefonts.geometry import _arc_arc_class, _OVERLAP
        assert _arc_arc_class(a1, a2) == _OVERLAP

    @given(st.lists(st.tuples(st.integers(0, 8), st.integers(0, 8)),
                    min_size=3, max_size=21))
    @settings(max_examples=300)
    def test_matches_exact_oracle(self, pts):
        # drop repeated consecutive points (zero-length bars)
        cleaned = [pts[0]]
        for p in pts[1:]:
            if p != cleaned[-1]:
                cleaned.append(p)
        if len(cleaned) < 3:
            return
        path = _poly(cleaned)
        try:
            got = path_is_simple(path, "forbid")
        except DisconnectedPath:
            return
        closed = cleaned[0] == cleaned[-1]
        assert got == polyline_is_simple_exact(cleaned, closed=closed)


def _seg_arc_crosses(seg, arc):
    from puzzlefonts.geometry import _seg_arc_class, _CROSS
    return _seg_arc_class(seg, arc) == _CROSS


class TestArcs:
    def test_extent_and_length(self):
        a = Arc(Point2(0, 0), 1.0, 90.0, 270.0, CCW)
        assert arc_extent(a) == pytest.approx(180.0)
        assert arc_length(a) == pytest.approx(math.pi)
        b = Arc(Point2(0, 0), 1.0, 90.0, 270.0, CW)
        assert arc_extent(b) == pytest.approx(180.0)
        z = Arc(Point2(0, 0), 1.0, 45.0, 45.0, CCW)
        assert arc_extent(z) == 0.0

    def test_membership(self):
        a = Arc(Point2(0, 0), 1.0, 350.0, 10.0, CCW)  # spans the wraparound
        assert arc_contains_angle(a, 0.0)
        assert arc_contains_angle(a, 355.0)
        assert not arc_contains_angle(a, 180.0)

    def test_endpoints(self):
        a = Arc(Point2(1, 1), 1.0, 0.0, 90.0, CCW)
        assert arc_start_point(a) == pytest.approx((2.0, 1.0))
        assert arc_end_point(a) == pytest.approx((1.0, 2.0))

    def test_point_arc_distance(self):
        a = Arc(Point2(0, 0), 1.0, 0.0, 90.0, CCW)
        assert point_arc_distance(Point2(2, 0), a) == pytest.approx(1.0)
        assert point_arc_distance(Point2(0, 0), a) == pytest.approx(1.0)
        # a point radially opposite the span measures to the nearest endpoint
        assert point_arc_distance(Point2(-2, 0), a) == pytest.approx(dist((-2, 0), (0, 1)))


class TestHull:
    def test_triangle_perimeter(self):
        assert hull_perimeter([(0, 0), (4, 0), (0, 3)]) == pytest.approx(12.0)

    def test_interior_point_ignored(self):
        hull = convex_hull([(0, 0), (4, 0), (0, 3), (1, 1)])
        assert (1.0, 1.0) not in hull

    def test_point_segment_distance(self):
        assert point_segment_distance((0, 2), (-1, 0), (1, 0)) == pytest.approx(2.0)
        assert point_segment_distance((5, 0), (-1, 0), (1, 0)) == pytest.approx(4.0)


@pytest.mark.parametrize("raw,expected", [
    (0.0, 0.0), (360.0, 0.0), (725.0, 5.0), (-90.0, 270.0), (359.5, 359.5),
])
def test_normalize_angle(raw, expected):
    assert normalize_angle(raw) == pytest.approx(expected)
