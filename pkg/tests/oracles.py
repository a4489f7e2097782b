"""Independent oracle implementations the tests check the library against.

Everything here is deliberately written from scratch against the definitions,
not by calling the code under test: exact rational segment intersection,
a naive belt-winding enumerator, and an exhaustive fold enumerator.
"""

from fractions import Fraction
from itertools import permutations, product

from puzzlefonts.conveyer import (
    CCW, CW, canonical_spec, compute_belt, validate_belt,
)
from puzzlefonts.errors import InternalTangentInfeasible, InvalidSpec


def segments_properly_interact(a, b, c, d) -> bool:
    """Exact test: do closed segments ab and cd share any point?

    Uses Fraction arithmetic, so inputs must be rationals (ints are fine).
    """
    ax, ay = map(Fraction, a)
    bx, by = map(Fraction, b)
    cx, cy = map(Fraction, c)
    dx, dy = map(Fraction, d)

    def orient(px, py, qx, qy, rx, ry):
        v = (qx - px) * (ry - py) - (qy - py) * (rx - px)
        return (v > 0) - (v < 0)

    d1 = orient(cx, cy, dx, dy, ax, ay)
    d2 = orient(cx, cy, dx, dy, bx, by)
    d3 = orient(ax, ay, bx, by, cx, cy)
    d4 = orient(ax, ay, bx, by, dx, dy)
    if d1 != d2 and d3 != d4:
        return True

    def on_segment(px, py, qx, qy, rx, ry):
        # r collinear with pq: is r within the bounding box?
        return (min(px, qx) <= rx <= max(px, qx)
                and min(py, qy) <= ry <= max(py, qy))

    if d1 == 0 and on_segment(cx, cy, dx, dy, ax, ay):
        return True
    if d2 == 0 and on_segment(cx, cy, dx, dy, bx, by):
        return True
    if d3 == 0 and on_segment(ax, ay, bx, by, cx, cy):
        return True
    if d4 == 0 and on_segment(ax, ay, bx, by, dx, dy):
        return True
    return False


def polyline_is_simple_exact(points, closed: bool = False) -> bool:
    """Brute-force simplicity of an integer-coordinate polyline."""
    n = len(points) - 1
    segs = [(points[i], points[i + 1]) for i in range(n)]
    for i in range(n):
        for j in range(i + 2, n):
            if closed and i == 0 and j == n - 1:
                continue
            if segments_properly_interact(*segs[i], *segs[j]):
                return False
    return True


def naive_belt_solutions(centers) -> list:
    """Every valid winding, found the dumb way: all n! * 2^n candidates."""
    n = len(centers)
    if n < 2:
        return []
    seen = set()
    out = set()
    for perm in permutations(range(n)):
        for orients in product((CCW, CW), repeat=n):
            winding = list(zip(perm, orients))
            canon = canonical_spec(winding)
            if canon in seen:
                continue
            seen.add(canon)
            try:
                path = compute_belt(centers, winding)
            except (InternalTangentInfeasible, InvalidSpec):
                continue
            if validate_belt(centers, path).all_ok:
                out.add(canon)
    return sorted(out)


def exhaustive_fold_exists(chain, slots_points) -> bool:
    """Plain depth-first enumeration over slot sequences, no pruning tricks.

    `slots_points` is the list of (right, acute1, acute2) corner triples.
    Mirrors the hinge semantics directly from the definitions.
    """
    n = len(slots_points)
    if n != chain.n_pieces:
        return False
    corner_order = ("R", "P", "Q")

    def poses(slot):
        r, a1, a2 = slot
        return ((r, a1, a2), (r, a2, a1))

    def corner_pos(corners, label):
        return corners[corner_order.index(label)]

    def rec(k, used, entry_point):
        if k == n:
            return True
        if k == 0:
            cands = [(i, p) for i in range(n) for p in poses(slots_points[i])]
        else:
            label = chain.hinges[k - 1][1]
            cands = []
            for i in range(n):
                if i in used:
                    continue
                for p in poses(slots_points[i]):
                    if corner_pos(p, label) == entry_point:
                        cands.append((i, p))
        for i, p in cands:
            nxt = None
            if k < n - 1:
                nxt = corner_pos(p, chain.hinges[k][0])
            if rec(k + 1, used | {i}, nxt):
                return True
        return False

    return rec(0, set(), None)
