import math
import random

import pytest

from puzzlefonts.conveyer import (
    CCW, CW, belt_length_lower_bound, canonical_spec, check_disk_set,
    compute_belt, fingerprint, solve_belt, validate_belt,
)
from puzzlefonts.errors import BudgetExceeded, InvalidSpec
from puzzlefonts.geometry import Arc, arc_extent
from oracles import naive_belt_solutions

STADIUM = [(0.0, 0.0), (4.0, 0.0)]
TRIANGLE = [(0.0, 0.0), (4.0, 0.0), (0.0, 3.0)]  # 3-4-5 centers, perimeter 12


class TestComputeBelt:
    def test_stadium_length(self):
        path = compute_belt(STADIUM, [(0, CCW), (1, CCW)])
        assert abs(path.total_length - (8 + 2 * math.pi)) < 1e-9

    def test_hull_triangle_length(self):
        path = compute_belt(TRIANGLE, [(0, CCW), (1, CCW), (2, CCW)])
        assert abs(path.total_length - (12 + 2 * math.pi)) < 1e-9
        assert validate_belt(TRIANGLE, path).all_ok

    def test_opposite_orientations_figure_eight(self):
        disks = [(0.0, 0.0), (3.0, 0.0)]
        path = compute_belt(disks, [(0, CCW), (1, CW)])
        arcs = [el for el in path.elements if isinstance(el, Arc)]
        assert {a.orientation for a in arcs} == {CCW, CW}
        rep = validate_belt(disks, path)
        assert rep.taut  # C1 residual below 1e-9 at all four junctions
        assert not rep.simple  # the two crossing tangents intersect

    def test_structure_alternates(self):
        path = compute_belt(STADIUM, [(0, CCW), (1, CCW)])
        kinds = [type(el).__name__ for el in path.elements]
        assert kinds == ["Arc", "Segment", "Arc", "Segment"]

    def test_minimal_gap_crossing_tangent_computes(self):
        # disjointness (>= 2 + tol) already implies the crossing tangent's
        # precondition, so a barely-legal pair must still realize
        disks = [(0.0, 0.0), (2.00001, 0.0)]
        path = compute_belt(disks, [(0, CCW), (1, CW)])
        assert validate_belt(disks, path).taut

    def test_invalid_specs(self):
        with pytest.raises(InvalidSpec):
            compute_belt(STADIUM, [(0, CCW), (0, CCW)])
        with pytest.raises(InvalidSpec):
            compute_belt(STADIUM, [(0, CCW)])
        with pytest.raises(InvalidSpec):
            compute_belt(STADIUM, [(0, CCW), (7, CCW)])

    def test_disjointness_enforced(self):
        with pytest.raises(ValueError):
            check_disk_set([(0, 0), (1.0, 0)])


class TestValidateBelt:
    def test_stadium_all_flags(self):
        rep = validate_belt(STADIUM, compute_belt(STADIUM, [(0, CCW), (1, CCW)]))
        assert (rep.simple, rep.avoids_interiors, rep.visits_all, rep.taut) == (True,) * 4

    def test_unvisited_disk(self):
        disks = [(0.0, 0.0), (4.0, 0.0), (2.0, 5.0)]
        path = compute_belt(disks, [(0, CCW), (1, CCW)])
        rep = validate_belt(disks, path)
        assert not rep.visits_all
        assert rep.simple

    def test_clearance_cases(self):
        # stadium belt's lower segment runs along y = -1
        ok = [(0.0, 0.0), (4.0, 0.0), (2.0, -3.0)]
        rep = validate_belt(ok, compute_belt(ok, [(0, CCW), (1, CCW)]))
        assert rep.avoids_interiors
        grazed = [(0.0, 0.0), (4.0, 0.0), (2.0, -1.5)]
        rep = validate_belt(grazed, compute_belt(grazed, [(0, CCW), (1, CCW)]))
        assert not rep.avoids_interiors
        with pytest.raises(ValueError):
            validate_belt([(0.0, 0.0), (4.0, 0.0), (1.0, 0.0)],
                          compute_belt(STADIUM, [(0, CCW), (1, CCW)]))

    def test_tangency_points_on_circles(self):
        path = compute_belt(TRIANGLE, [(0, CCW), (1, CCW), (2, CCW)])
        disks = check_disk_set(TRIANGLE)
        for el in path.elements:
            if isinstance(el, Arc):
                continue
            near_start = min(math.dist(el.a, c) for c in disks)
            near_end = min(math.dist(el.b, c) for c in disks)
            assert abs(near_start - 1.0) < 1e-9
            assert abs(near_end - 1.0) < 1e-9


class TestSolver:
    def test_two_disks_single_solution(self):
        sols = solve_belt(STADIUM)
        assert sols == [canonical_spec([(0, CCW), (1, CCW)])]

    def test_mirror_counted_once(self):
        assert canonical_spec([(0, CCW), (1, CCW)]) == canonical_spec([(0, CW), (1, CW)])

    def test_three_disk_hull_winding_found(self):
        sols = solve_belt(TRIANGLE)
        assert canonical_spec([(0, CCW), (1, CCW), (2, CCW)]) in sols

    def test_solutions_validate(self):
        for spec in solve_belt(TRIANGLE):
            rep = validate_belt(TRIANGLE, compute_belt(TRIANGLE, spec))
            assert rep.all_ok

    def test_single_disk_no_solutions(self):
        assert solve_belt([(0.0, 0.0)]) == []

    def test_grazing_belt_is_valid(self):
        # three collinear disks: the hull belt grazes the middle one with a
        # zero-extent arc, which still counts as visiting and stays simple
        disks = [(0.0, 0.0), (4.0, 0.0), (8.0, 0.0)]
        path = compute_belt(disks, [(0, CCW), (1, CCW), (2, CCW)])
        zero_arcs = [el for el in path.elements
                     if isinstance(el, Arc) and arc_extent(el) == 0.0]
        assert len(zero_arcs) == 1  # the middle disk is visited by a graze
        rep = validate_belt(disks, path)
        assert rep.all_ok, rep
        assert canonical_spec([(0, CCW), (1, CCW), (2, CCW)]) in solve_belt(disks)

    def test_budget_exceeded_flags_partial(self):
        with pytest.raises(BudgetExceeded) as err:
            solve_belt([(0, 0), (3, 0), (6, 0), (0, 3), (6, 3)], budget=3)
        assert isinstance(err.value.partial, list)

    def test_length_lower_bound(self):
        for spec in solve_belt(TRIANGLE):
            path = compute_belt(TRIANGLE, spec)
            assert path.total_length >= belt_length_lower_bound(TRIANGLE) - 1e-9

    def test_matches_naive_oracle_on_random_sets(self):
        rng = random.Random(20240811)
        for _ in range(8):
            disks = _random_disjoint_disks(rng, rng.randint(2, 4))
            assert solve_belt(disks) == naive_belt_solutions(disks)


def _random_disjoint_disks(rng, n, span=9.0):
    pts = []
    while len(pts) < n:
        cand = (round(rng.uniform(0, span), 3), round(rng.uniform(0, span), 3))
        if all(math.dist(cand, p) >= 2.05 for p in pts):
            pts.append(cand)
    return pts


class TestCanonicalization:
    def test_rotation_invariance(self):
        w = [(0, CCW), (2, CW), (1, CCW)]
        assert canonical_spec(w) == canonical_spec(w[1:] + w[:1])

    def test_reversal_with_flip_invariance(self):
        w = [(0, CCW), (2, CW), (1, CCW)]
        rev = [(i, -o) for i, o in reversed(w)]
        assert canonical_spec(w) == canonical_spec(rev)

    def test_distinct_orientations_distinct(self):
        a = canonical_spec([(0, CCW), (1, CCW), (2, CCW)])
        b = canonical_spec([(0, CCW), (1, CW), (2, CCW)])
        assert a != b


class TestFingerprint:
    def test_translation_invariant(self):
        d = [(0.0, 0.0), (3.0, 0.5)]
        moved = [(x + 5, y + 7) for x, y in d]
        assert fingerprint(d) == fingerprint(moved)

    def test_perturbation_changes_key(self):
        assert fingerprint([(0, 0), (3, 0)]) != fingerprint([(0, 0), (3.5, 0)])

    def test_order_independent(self):
        assert fingerprint([(0, 0), (3, 1)]) == fingerprint([(3, 1), (0, 0)])


class TestShippedFont:
    def test_marked_belts_validate(self, shipped):
        for ch, rec in sorted(shipped["conveyer"].glyphs.items()):
            rep = validate_belt(rec.disks, compute_belt(rec.disks, rec.belt))
            assert rep.all_ok, (ch, rep)

    def test_fingerprints_distinct(self, shipped):
        prints = [fingerprint(rec.disks) for rec in shipped["conveyer"].glyphs.values()]
        assert len(set(prints)) == len(prints)
