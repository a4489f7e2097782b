"""Conveyer-belt font: taut belts wrapping disjoint unit disks.

A glyph is a set of unit disks plus a winding: a cyclic list of
(disk index, wrap orientation) entries.  The belt realizing a winding
alternates tangent segments and circular arcs; a disk wrapped CCW has its
center on the left of the belt's travel direction, which fixes the tangent
choice between any two consecutive disks.  Reading the disks alone back into
a letter means finding the winding again, which the exhaustive solver does
at desk scale.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .errors import BudgetExceeded, DisconnectedPath, InternalTangentInfeasible, InvalidSpec
from .geometry import (
    CCW, CW, TOL, Arc, Point2, Segment, angle_of, arc_extent, arc_length,
    arc_tangent_dir, cross, dist, dot, element_end, element_start,
    hull_perimeter, path_is_simple, point_arc_distance,
    point_segment_distance, sub, tangent_points,
)

DEFAULT_BUDGET = 12_000_000  # lets the full 9-disk desk scale enumerate


def check_disk_set(centers) -> tuple:
    pts = tuple(Point2(float(x), float(y)) for x, y in centers)
    for p in pts:
        if not (math.isfinite(p.x) and math.isfinite(p.y)):
            raise ValueError("disk center coordinates must be finite")
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            if dist(pts[i], pts[j]) < 2.0 + TOL:
                raise ValueError(f"disks {i} and {j} are not disjoint")
    return pts


def check_spec(winding, n_disks: int) -> tuple:
    w = tuple((int(i), int(o)) for i, o in winding)
    if not w:
        raise InvalidSpec("winding is empty")
    for i, o in w:
        if not 0 <= i < n_disks:
            raise InvalidSpec(f"disk index {i} out of range")
        if o not in (CCW, CW):
            raise InvalidSpec(f"orientation must be +-1, got {o}")
    for k in range(len(w)):
        if w[k][0] == w[(k + 1) % len(w)][0]:
            raise InvalidSpec(f"disk {w[k][0]} appears twice in a row (cyclically)")
    return w


@dataclass(frozen=True)
class BeltPath:
    elements: tuple          # alternating Arc / Segment, chained and closed
    disk_of_arc: tuple       # disk index per arc, in element order
    total_length: float


def _tangent_for(o1: int, o2: int) -> tuple[str, str]:
    if o1 == CCW and o2 == CCW:
        return "external", "right"
    if o1 == CW and o2 == CW:
        return "external", "left"
    if o1 == CCW and o2 == CW:
        return "internal", "right"
    return "internal", "left"


def compute_belt(centers, winding) -> BeltPath:
    """Realize a winding as the alternating tangent/arc belt path.

    Equal consecutive orientations take the external tangent on the side the
    wrap direction dictates; opposite orientations take the crossing tangent.
    Each disk contributes one arc from its incoming to its outgoing tangent
    point, swept in its own orientation.
    """
    disks = check_disk_set(centers)
    w = check_spec(winding, len(disks))
    n = len(w)
    if n < 2:
        raise InvalidSpec("a realizable winding needs at least two entries")
    segs = []
    for k in range(n):
        i, oi = w[k]
        j, oj = w[(k + 1) % n]
        kind, side = _tangent_for(oi, oj)
        if kind == "internal" and dist(disks[i], disks[j]) <= 2.0 + TOL:
            raise InternalTangentInfeasible(f"disks {i} and {j} too close for a crossing tangent")
        p, q = tangent_points(disks[i], disks[j], kind, side)
        segs.append(Segment(p, q))
    elements = []
    disk_of_arc = []
    total = 0.0
    for k in range(n):
        i, oi = w[k]
        c = disks[i]
        incoming = segs[(k - 1) % n].b
        outgoing = segs[k].a
        arc = Arc(c, 1.0, angle_of(sub(incoming, c)), angle_of(sub(outgoing, c)), oi)
        elements.append(arc)
        disk_of_arc.append(i)
        total += arc_length(arc)
        elements.append(segs[k])
        total += dist(segs[k].a, segs[k].b)
    return BeltPath(tuple(elements), tuple(disk_of_arc), total)


@dataclass(frozen=True)
class ValidationReport:
    simple: bool
    avoids_interiors: bool
    visits_all: bool
    taut: bool

    @property
    def all_ok(self) -> bool:
        return self.simple and self.avoids_interiors and self.visits_all and self.taut


def _junctions_c1(elements) -> bool:
    n = len(elements)
    for k in range(n):
        e1 = elements[k]
        e2 = elements[(k + 1) % n]
        p = element_end(e1)
        if dist(p, element_start(e2)) > 1e-7:
            return False
        if isinstance(e1, Segment):
            d = sub(e1.b, e1.a)
            norm = math.hypot(*d) or 1.0
            d1 = Point2(d.x / norm, d.y / norm)
        else:
            d1 = arc_tangent_dir(e1, e1.end_angle)
        if isinstance(e2, Segment):
            d = sub(e2.b, e2.a)
            norm = math.hypot(*d) or 1.0
            d2 = Point2(d.x / norm, d.y / norm)
        else:
            d2 = arc_tangent_dir(e2, e2.start_angle)
        if abs(cross(d1, d2)) > 1e-9 or dot(d1, d2) <= 0.0:
            return False
    return True


def _avoids_interiors(disks, elements) -> bool:
    for el in elements:
        for c in disks:
            if isinstance(el, Arc):
                if dist(el.center, c) <= TOL:
                    continue  # the arc rides on this disk's own circle
                if point_arc_distance(c, el) < 1.0 - 1e-9:
                    return False
            else:
                if point_segment_distance(c, el.a, el.b) < 1.0 - 1e-9:
                    return False
    return True


def validate_belt(centers, path: BeltPath) -> ValidationReport:
    """Check the four belt clauses; tangency contacts do not count as entering."""
    disks = check_disk_set(centers)
    try:
        simple = path_is_simple(list(path.elements), "forbid")
    except DisconnectedPath:
        simple = False
    avoids = _avoids_interiors(disks, path.elements)
    visited = set(path.disk_of_arc)
    visits_all = visited == set(range(len(disks)))
    taut = _junctions_c1(path.elements) and all(
        0.0 <= arc_extent(el) < 360.0 for el in path.elements if isinstance(el, Arc))
    return ValidationReport(simple, avoids, visits_all, taut)


def _belt_ok(disks, path: BeltPath, n_disks: int) -> bool:
    """Short-circuit version of validate_belt for the solver's inner loop."""
    if set(path.disk_of_arc) != set(range(n_disks)):
        return False
    if not _junctions_c1(path.elements):
        return False
    if not _avoids_interiors(disks, path.elements):
        return False
    try:
        return path_is_simple(list(path.elements), "forbid")
    except DisconnectedPath:
        return False


def canonical_spec(winding) -> tuple:
    """Canonical form of a cyclic winding, identifying reversed traversals.

    Minimal rotation of the (index, orientation) tuple, also minimized over
    the reversed list with all orientations flipped (the same belt walked
    backwards).
    """
    w = tuple((int(i), int(o)) for i, o in winding)
    n = len(w)
    best = None
    rev = tuple((i, -o) for i, o in reversed(w))
    for cand in (w, rev):
        for r in range(n):
            rot = cand[r:] + cand[:r]
            if best is None or rot < best:
                best = rot
    return best


def solve_belt(centers, budget: int = DEFAULT_BUDGET) -> list[tuple]:
    """All valid belts for a disk set, as canonical windings, sorted.

    Enumerates cyclic visit orders up to rotation and reflection (first entry
    pinned to disk 0 wrapped CCW) times the orientation assignments of the
    remaining disks, realizes each candidate, and keeps those whose
    validation report is all-true.
    """
    disks = check_disk_set(centers)
    n = len(disks)
    if n < 2:
        return []
    solutions = set()
    nodes = 0
    indices = list(range(1, n))
    for perm in itertools.permutations(indices):
        order = (0,) + perm
        for orient_mask in range(2 ** (n - 1)):
            nodes += 1
            if nodes > budget:
                err = BudgetExceeded(f"solver exceeded {budget} candidates")
                err.partial = sorted(solutions)
                raise err
            winding = [(0, CCW)]
            for b, idx in enumerate(order[1:]):
                winding.append((idx, CCW if orient_mask & (1 << b) else CW))
            try:
                path = compute_belt(disks, winding)
            except (InternalTangentInfeasible, InvalidSpec):
                continue
            if _belt_ok(disks, path, n):
                solutions.add(canonical_spec(winding))
    return sorted(solutions)


def fingerprint(centers, quantum: float = 1e-6) -> tuple:
    """Translation-normalized, sorted, quantized key of a disk configuration."""
    disks = check_disk_set(centers)
    min_x = min(p.x for p in disks)
    min_y = min(p.y for p in disks)
    return tuple(sorted((round((p.x - min_x) / quantum), round((p.y - min_y) / quantum))
                        for p in disks))


def belt_length_lower_bound(centers) -> float:
    """Any valid belt is at least as long as the hull perimeter of centers."""
    return hull_perimeter(centers)
