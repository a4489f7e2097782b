"""2D geometric primitives shared by all font modules.

Coordinates are plain floats in abstract units (all shipped data stays below
magnitude 100), angles are degrees.  Every incidence predicate uses the global
tolerance TOL.  Internally angles live in the half-open range [0, 360); raw
input values such as a 360 in font data are preserved at the data layer and
folded here.
"""

from __future__ import annotations

import math
from typing import NamedTuple

from .errors import DegenerateDisks, DisconnectedPath

TOL = 1e-9

# Path elements chain end-to-end within this slack (hand-authored paths may
# carry rounded coordinates; constructed belts chain exactly).
CHAIN_TOL = 1e-6

CCW = 1
CW = -1


class Point2(NamedTuple):
    x: float
    y: float


class Segment(NamedTuple):
    a: Point2
    b: Point2


class Arc(NamedTuple):
    center: Point2
    radius: float
    start_angle: float  # degrees
    end_angle: float    # degrees
    orientation: int    # CCW or CW


def dist(p, q) -> float:
    return math.hypot(p[0] - q[0], p[1] - q[1])


def dot(u, v) -> float:
    return u[0] * v[0] + u[1] * v[1]


def cross(u, v) -> float:
    return u[0] * v[1] - u[1] * v[0]


def sub(p, q) -> Point2:
    return Point2(p[0] - q[0], p[1] - q[1])


def add(p, q) -> Point2:
    return Point2(p[0] + q[0], p[1] + q[1])


def normalize_angle(deg: float) -> float:
    """Fold an angle in degrees into [0, 360)."""
    a = math.fmod(deg, 360.0)
    if a < 0.0:
        a += 360.0
    return 0.0 if a == 360.0 else a


def angle_of(v) -> float:
    """Direction of a vector in degrees, in [0, 360)."""
    return normalize_angle(math.degrees(math.atan2(v[1], v[0])))


def unit_vector(deg: float) -> Point2:
    r = math.radians(deg)
    return Point2(math.cos(r), math.sin(r))


def rotate(v, deg: float) -> Point2:
    r = math.radians(deg)
    c, s = math.cos(r), math.sin(r)
    return Point2(c * v[0] - s * v[1], s * v[0] + c * v[1])


def tangent_points(c1, c2, kind: str, side: str) -> tuple[Point2, Point2]:
    """Touch points of a common tangent of two unit circles.

    `side` picks one of the two tangents of the requested kind: "left" means
    the touch point on the first circle lies strictly left of the directed
    center line c1 -> c2 (for external tangents both touch points do).
    """
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    d = dist(c1, c2)
    s = 1.0 if side == "left" else -1.0
    if kind == "external":
        if d <= 2 * TOL:
            raise DegenerateDisks(f"centers {c1} and {c2} coincide")
        nx = -(c2[1] - c1[1]) / d * s
        ny = (c2[0] - c1[0]) / d * s
        return (Point2(c1[0] + nx, c1[1] + ny), Point2(c2[0] + nx, c2[1] + ny))
    if kind == "internal":
        if d <= 2.0 + TOL:
            raise DegenerateDisks(f"centers {c1} and {c2} too close for a crossing tangent")
        u = Point2((c2[0] - c1[0]) / d, (c2[1] - c1[1]) / d)
        phi = math.degrees(math.acos(2.0 / d))
        p1 = add(c1, rotate(u, s * phi))
        p2 = add(c2, rotate(Point2(-u.x, -u.y), s * phi))
        return (Point2(*p1), Point2(*p2))
    raise ValueError(f"kind must be 'external' or 'internal', got {kind!r}")


# -- arcs ---------------------------------------------------------------

def arc_extent(arc: Arc) -> float:
    """Swept angle of an arc in degrees, in [0, 360)."""
    if arc.orientation == CCW:
        return normalize_angle(arc.end_angle - arc.start_angle)
    return normalize_angle(arc.start_angle - arc.end_angle)


def arc_length(arc: Arc) -> float:
    return math.radians(arc_extent(arc)) * arc.radius


def point_on_circle(center, radius: float, deg: float) -> Point2:
    return Point2(center[0] + radius * math.cos(math.radians(deg)),
                  center[1] + radius * math.sin(math.radians(deg)))


def arc_start_point(arc: Arc) -> Point2:
    return point_on_circle(arc.center, arc.radius, arc.start_angle)


def arc_end_point(arc: Arc) -> Point2:
    return point_on_circle(arc.center, arc.radius, arc.end_angle)


def arc_contains_angle(arc: Arc, deg: float, slack_deg: float = 1e-7) -> bool:
    """Whether a polar angle lies within the arc's swept span."""
    if arc.orientation == CCW:
        off = normalize_angle(deg - arc.start_angle)
    else:
        off = normalize_angle(arc.start_angle - deg)
    ext = arc_extent(arc)
    return off <= ext + slack_deg or off >= 360.0 - slack_deg


def arc_tangent_dir(arc: Arc, deg: float) -> Point2:
    """Unit tangent direction of traversal at polar angle `deg`."""
    radial = unit_vector(deg)
    if arc.orientation == CCW:
        return Point2(-radial.y, radial.x)
    return Point2(radial.y, -radial.x)


# -- element plumbing ---------------------------------------------------

def element_start(el) -> Point2:
    return el.a if isinstance(el, Segment) else arc_start_point(el)


def element_end(el) -> Point2:
    return el.b if isinstance(el, Segment) else arc_end_point(el)


def element_length(el) -> float:
    return dist(el.a, el.b) if isinstance(el, Segment) else arc_length(el)


# -- distances ----------------------------------------------------------

def point_segment_distance(p, a, b) -> float:
    ab = sub(b, a)
    denom = dot(ab, ab)
    if denom <= TOL * TOL:
        return dist(p, a)
    t = dot(sub(p, a), ab) / denom
    t = min(1.0, max(0.0, t))
    return dist(p, Point2(a[0] + t * ab.x, a[1] + t * ab.y))


def point_arc_distance(p, arc: Arc) -> float:
    theta = angle_of(sub(p, arc.center))
    best = math.inf
    if arc_contains_angle(arc, theta):
        best = abs(dist(p, arc.center) - arc.radius)
    best = min(best, dist(p, arc_start_point(arc)), dist(p, arc_end_point(arc)))
    return best


# -- pairwise intersection classification --------------------------------

_NONE = 0      # disjoint
_TOUCH = 1     # share isolated points but no transversal crossing
_OVERLAP = 2   # collinear / cocircular overlap of positive length
_CROSS = 3     # proper transversal crossing


def _sign(x: float) -> int:
    if x > TOL:
        return 1
    if x < -TOL:
        return -1
    return 0


def _seg_seg_class(s1: Segment, s2: Segment) -> int:
    a, b = s1.a, s1.b
    c, d = s2.a, s2.b
    d1 = _sign(cross(sub(d, c), sub(a, c)))
    d2 = _sign(cross(sub(d, c), sub(b, c)))
    d3 = _sign(cross(sub(b, a), sub(c, a)))
    d4 = _sign(cross(sub(b, a), sub(d, a)))
    if d1 == d2 == d3 == d4 == 0:
        # collinear: project on the dominant axis
        ab = sub(b, a)
        if abs(ab.x) >= abs(ab.y):
            lo1, hi1 = sorted((a.x, b.x))
            lo2, hi2 = sorted((c.x, d.x))
        else:
            lo1, hi1 = sorted((a.y, b.y))
            lo2, hi2 = sorted((c.y, d.y))
        overlap = min(hi1, hi2) - max(lo1, lo2)
        if overlap > TOL:
            return _OVERLAP
        if overlap >= -TOL:
            return _TOUCH
        return _NONE
    if d1 != d2 and d3 != d4 and 0 not in (d1, d2, d3, d4):
        return _CROSS
    # at least one endpoint lies on the other segment (T-touch or corner)
    for p, s in ((a, s2), (b, s2), (c, s1), (d, s1)):
        if point_segment_distance(p, s.a, s.b) <= TOL * 10:
            return _TOUCH
    return _NONE


def _line_circle_params(a, b, center, radius: float) -> list[float]:
    """Parameters t of intersections of line a+t(b-a) with a circle."""
    ab = sub(b, a)
    ac = sub(a, center)
    qa = dot(ab, ab)
    if qa <= TOL * TOL:
        return []
    qb = 2.0 * dot(ac, ab)
    qc = dot(ac, ac) - radius * radius
    disc = qb * qb - 4.0 * qa * qc
    if disc < -TOL:
        return []
    if disc < 0.0:
        disc = 0.0
    r = math.sqrt(disc)
    return [(-qb - r) / (2 * qa), (-qb + r) / (2 * qa)]


def _seg_arc_class(seg: Segment, arc: Arc) -> int:
    ts = _line_circle_params(seg.a, seg.b, arc.center, arc.radius)
    if not ts:
        return _NONE
    seg_len = dist(seg.a, seg.b)
    t_slack = (TOL * 100) / max(seg_len, TOL)
    tangential = abs(ts[0] - ts[1]) * seg_len <= 1e-6
    hits = []
    for t in ts:
        if -t_slack <= t <= 1.0 + t_slack:
            p = Point2(seg.a.x + t * (seg.b.x - seg.a.x), seg.a.y + t * (seg.b.y - seg.a.y))
            theta = angle_of(sub(p, arc.center))
            if arc_contains_angle(arc, theta):
                hits.append(t)
    if not hits:
        return _NONE
    if tangential:
        return _TOUCH
    interior = [t for t in hits if t_slack < t < 1.0 - t_slack]
    return _CROSS if interior else _TOUCH


def _arc_arc_class(a1: Arc, a2: Arc) -> int:
    d = dist(a1.center, a2.center)
    if d <= TOL and abs(a1.radius - a2.radius) <= TOL:
        # same supporting circle: compare angular intervals
        ext2 = arc_extent(a2)
        # sample along a2 against a1's span; coarse but robust
        probes = []
        steps = 8
        for k in range(steps + 1):
            if a2.orientation == CCW:
                ang = a2.start_angle + ext2 * k / steps
            else:
                ang = a2.start_angle - ext2 * k / steps
            probes.append(arc_contains_angle(a1, ang, slack_deg=1e-9))
        inside = sum(probes)
        if inside == 0:
            return _NONE
        if inside == len(probes) or inside > 1:
            return _OVERLAP
        return _TOUCH
    r1, r2 = a1.radius, a2.radius
    if d > r1 + r2 + TOL or d < abs(r1 - r2) - TOL:
        return _NONE
    tangential = abs(d - (r1 + r2)) <= TOL * 100 or abs(d - abs(r1 - r2)) <= TOL * 100
    # circle-circle intersection points
    ax, ay = a1.center
    bx, by = a2.center
    f = (r1 * r1 - r2 * r2 + d * d) / (2 * d * d)
    px = ax + f * (bx - ax)
    py = ay + f * (by - ay)
    h2 = r1 * r1 - f * f * d * d
    h = math.sqrt(max(0.0, h2)) / d
    pts = {(px + h * (by - ay), py - h * (bx - ax)), (px - h * (by - ay), py + h * (bx - ax))}
    hits = 0
    for p in pts:
        t1 = angle_of(sub(p, a1.center))
        t2 = angle_of(sub(p, a2.center))
        if arc_contains_angle(a1, t1) and arc_contains_angle(a2, t2):
            hits += 1
    if hits == 0:
        return _NONE
    if tangential:
        return _TOUCH
    return _CROSS


def _element_class(e1, e2) -> int:
    if isinstance(e1, Segment) and isinstance(e2, Segment):
        return _seg_seg_class(e1, e2)
    if isinstance(e1, Segment):
        return _seg_arc_class(e1, e2)
    if isinstance(e2, Segment):
        return _seg_arc_class(e2, e1)
    return _arc_arc_class(e1, e2)


def path_is_simple(path: list, overlap_policy: str = "forbid") -> bool:
    """True iff no two non-adjacent path elements intersect.

    Elements must chain end-to-end (within CHAIN_TOL); a closed chain makes
    the first and last elements adjacent.  Zero-length elements (a belt
    grazing a disk leaves a zero-extent arc) carry no geometry, so adjacency
    is decided after dropping them: the elements on either side of a graze
    are consecutive on the actual curve, not a self-intersection.  Under
    "allow_collinear", exact overlap of collinear pieces and isolated touch
    points are permitted; transversal crossings never are.
    """
    if overlap_policy not in ("forbid", "allow_collinear"):
        raise ValueError(f"unknown overlap policy {overlap_policy!r}")
    if not path:
        return True
    for i in range(len(path) - 1):
        if dist(element_end(path[i]), element_start(path[i + 1])) > CHAIN_TOL:
            raise DisconnectedPath(f"element {i} does not chain to element {i + 1}")
    closed = dist(element_end(path[-1]), element_start(path[0])) <= CHAIN_TOL
    real = [el for el in path if element_length(el) > TOL]
    n = len(real)
    for i in range(n):
        for j in range(i + 1, n):
            if j == i + 1:
                continue
            if closed and i == 0 and j == n - 1:
                continue
            cls = _element_class(real[i], real[j])
            if cls == _NONE:
                continue
            if overlap_policy == "forbid":
                return False
            if cls == _CROSS:
                return False
    return True


# -- convex hull ----------------------------------------------------------

def convex_hull(points) -> list[Point2]:
    """Hull vertices in CCW order (Andrew's monotone chain)."""
    pts = sorted(set((float(p[0]), float(p[1])) for p in points))
    if len(pts) <= 2:
        return [Point2(*p) for p in pts]
    lower: list = []
    for p in pts:
        while len(lower) > 1 and cross(sub(lower[-1], lower[-2]), sub(p, lower[-2])) <= 0:
            lower.pop()
        lower.append(p)
    upper: list = []
    for p in reversed(pts):
        while len(upper) > 1 and cross(sub(upper[-1], upper[-2]), sub(p, upper[-2])) <= 0:
            upper.pop()
        upper.append(p)
    return [Point2(*p) for p in lower[:-1] + upper[:-1]]


def hull_perimeter(points) -> float:
    hull = convex_hull(points)
    if len(hull) < 2:
        return 0.0
    return sum(dist(hull[i], hull[(i + 1) % len(hull)]) for i in range(len(hull)))
