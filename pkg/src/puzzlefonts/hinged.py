"""Hinged-dissection font: 32-cell half-square glyphs and the 128-piece chain.

A glyph is a polyabolo: edge-connected half-square right triangles on the
integer lattice, 32 of them for the shipped font (area 16, the same as the
4x4 square every glyph shares a dissection with).  Refining a glyph splits
each cell at its edge midpoints into 4 congruent sub-triangles with legs 1/2,
giving 128 slots.  The chain is an ordered list of 128 such pieces, hinged
corner-to-corner; folding places consecutive pieces into slots so that each
hinge's two designated corners land on the same point.  Feasibility is a
property of the shipped chain data and is verified empirically by search.

All cell corner coordinates are integers and slot corners lie on the
half-integer grid, so every geometric comparison here is exact.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import NamedTuple

from .errors import BudgetExceeded, InvalidPolyabolo
from .scene import VectorScene

DIAGONALS = ("NE", "NW")
HALVES = ("first", "second")
CORNERS = ("R", "P", "Q")  # right angle, then the two acute (hypotenuse) corners

DEFAULT_BUDGET = 10_000_000


class Cell(NamedTuple):
    sx: int
    sy: int
    diagonal: str  # NE: (sx,sy)->(sx+1,sy+1); NW: (sx+1,sy)->(sx,sy+1)
    half: str      # first = above the diagonal, second = below


class Slot(NamedTuple):
    right: tuple   # right-angle corner (x, y), half-integer grid
    acute1: tuple
    acute2: tuple


def check_cell(cell) -> Cell:
    c = Cell(int(cell[0]), int(cell[1]), cell[2], cell[3])
    if c.diagonal not in DIAGONALS:
        raise ValueError(f"diagonal must be NE or NW, got {c.diagonal!r}")
    if c.half not in HALVES:
        raise ValueError(f"half must be first or second, got {c.half!r}")
    return c


def cell_triangle(cell: Cell) -> tuple:
    """(right_angle_vertex, acute_vertex, acute_vertex), integer coords."""
    x, y = cell.sx, cell.sy
    if cell.diagonal == "NE":
        if cell.half == "first":   # above: right angle at NW corner
            return ((x, y + 1), (x, y), (x + 1, y + 1))
        return ((x + 1, y), (x, y), (x + 1, y + 1))
    if cell.half == "first":       # above: right angle at NE corner
        return ((x + 1, y + 1), (x + 1, y), (x, y + 1))
    return ((x, y), (x + 1, y), (x, y + 1))


def _edges_of(tri) -> list:
    r, a, b = tri
    return [frozenset((r, a)), frozenset((r, b)), frozenset((a, b))]


@dataclass(frozen=True)
class PolyaboloReport:
    cell_count: int
    expected_cells: int
    connected: bool
    no_overlap: bool
    area: float

    @property
    def ok(self) -> bool:
        return (self.cell_count == self.expected_cells and self.connected
                and self.no_overlap)


def validate_polyabolo(cells, expected_cells: int = 32) -> PolyaboloReport:
    """Cell count, edge-connectivity, pairwise disjointness, total area."""
    cs = [check_cell(c) for c in cells]
    unique = sorted(set(cs))
    no_overlap = len(unique) == len(cs)
    by_square: dict = {}
    for c in unique:
        by_square.setdefault((c.sx, c.sy), []).append(c)
    for square_cells in by_square.values():
        if len({c.diagonal for c in square_cells}) > 1:
            no_overlap = False  # halves of different diagonals overlap
    # connectivity over shared (leg or hypotenuse) edges
    edge_map: dict = {}
    for idx, c in enumerate(unique):
        for e in _edges_of(cell_triangle(c)):
            edge_map.setdefault(e, []).append(idx)
    connected = True
    if unique:
        seen = {0}
        stack = [0]
        adj: dict = {i: set() for i in range(len(unique))}
        for owners in edge_map.values():
            for i, j in itertools.combinations(owners, 2):
                adj[i].add(j)
                adj[j].add(i)
        while stack:
            i = stack.pop()
            for j in adj[i]:
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
        connected = len(seen) == len(unique)
    else:
        connected = False
    return PolyaboloReport(len(cs), expected_cells, connected, no_overlap, len(unique) * 0.5)


def refine(cells, expected_cells: int | None = None) -> list[Slot]:
    """Split each cell into its 4 midpoint sub-triangles (legs 1/2).

    Returns slots sorted lexicographically; this order is the search and
    canonicalization order everywhere else.
    """
    expected = expected_cells if expected_cells is not None else len(set(check_cell(c) for c in cells))
    report = validate_polyabolo(cells, expected)
    if not report.ok:
        raise InvalidPolyabolo(f"invalid polyabolo: {report}")
    slots = []
    for cell in sorted(set(check_cell(c) for c in cells)):
        r, a, b = cell_triangle(cell)
        m_ra = ((r[0] + a[0]) / 2.0, (r[1] + a[1]) / 2.0)
        m_rb = ((r[0] + b[0]) / 2.0, (r[1] + b[1]) / 2.0)
        m_ab = ((a[0] + b[0]) / 2.0, (a[1] + b[1]) / 2.0)
        rf = (float(r[0]), float(r[1]))
        af = (float(a[0]), float(a[1]))
        bf = (float(b[0]), float(b[1]))
        for right, ac1, ac2 in ((rf, m_ra, m_rb), (m_ra, af, m_ab),
                                (m_rb, bf, m_ab), (m_ab, m_ra, m_rb)):
            lo, hi = sorted((ac1, ac2))
            slots.append(Slot(right, lo, hi))
    return sorted(slots)


def slot_adjacency(slots) -> tuple[dict, dict]:
    """(edge_neighbors, vertex_neighbors) maps: slot index -> set of indices."""
    edge_nb: dict = {i: set() for i in range(len(slots))}
    vert_nb: dict = {i: set() for i in range(len(slots))}
    edge_map: dict = {}
    vert_map: dict = {}
    for i, s in enumerate(slots):
        for e in _edges_of(s):
            edge_map.setdefault(e, []).append(i)
        for v in s:
            vert_map.setdefault(v, []).append(i)
    for owners in edge_map.values():
        for i, j in itertools.combinations(owners, 2):
            edge_nb[i].add(j)
            edge_nb[j].add(i)
    for owners in vert_map.values():
        for i, j in itertools.combinations(owners, 2):
            vert_nb[i].add(j)
            vert_nb[j].add(i)
    return edge_nb, vert_nb


@dataclass(frozen=True)
class HingedChain:
    """Open chain of congruent pieces; hinges name a corner on each side."""
    n_pieces: int
    hinges: tuple  # (exit_corner_of_i, entry_corner_of_next) per link, in CORNERS

    def __post_init__(self):
        if self.n_pieces < 1:
            raise ValueError("chain needs at least one piece")
        if len(self.hinges) != self.n_pieces - 1:
            raise ValueError(f"chain of {self.n_pieces} pieces needs {self.n_pieces - 1} hinges")
        for ex, en in self.hinges:
            if ex not in CORNERS or en not in CORNERS:
                raise ValueError(f"hinge corners must be in {CORNERS}, got {(ex, en)}")

    @staticmethod
    def uniform(n_pieces: int, exit_corner: str = "Q", entry_corner: str = "P") -> "HingedChain":
        return HingedChain(n_pieces, tuple((exit_corner, entry_corner) for _ in range(n_pieces - 1)))

    @staticmethod
    def cyclic(n_pieces: int, pattern) -> "HingedChain":
        """Hinges repeat the given (exit, entry) pattern cyclically."""
        pats = tuple(tuple(p) for p in pattern)
        if not pats:
            raise ValueError("hinge pattern must not be empty")
        return HingedChain(n_pieces, tuple(pats[k % len(pats)] for k in range(n_pieces - 1)))


class Placement(NamedTuple):
    slot_index: int
    corners: tuple  # positions of (R, P, Q) piece corners


@dataclass(frozen=True)
class FoldAssignment:
    placements: tuple  # one Placement per chain piece, in chain order

    def slot_indices(self) -> list[int]:
        """Piece order to slot order, the exportable form of a fold."""
        return [p.slot_index for p in self.placements]


def _poses(slot: Slot) -> tuple:
    """Both congruence maps of a piece onto a slot (R is forced, acutes swap)."""
    return ((slot.right, slot.acute1, slot.acute2),
            (slot.right, slot.acute2, slot.acute1))


def _corner_position(corners, label: str):
    return corners[CORNERS.index(label)]


class _Stop(Exception):
    """Internal: abandon the current restart branch."""


def fold_chain(chain: HingedChain, cells, budget: int = DEFAULT_BUDGET,
               expected_cells: int | None = None) -> FoldAssignment | None:
    """Backtracking search for a fold of the chain into the glyph's slots.

    Placements are tried most-constrained-first (fewest onward contacts at
    the exit corner) with lexicographic slot order breaking ties, so the
    first assignment found is canonical and runs are reproducible.  The
    search prunes whenever the unplaced slots fall apart into disconnected
    contact components, and it rotates through the possible first placements
    under per-restart node caps before burning the whole budget depth-first.
    Returns None only when the space is provably exhausted; raises
    BudgetExceeded when the node budget runs out first.
    """
    slots = refine(cells, expected_cells)
    n = len(slots)
    if n != chain.n_pieces:
        raise ValueError(f"chain has {chain.n_pieces} pieces but the glyph refines to {n} slots")

    # point -> [(slot index, corner label, pose index), ...]
    contact: dict = {}
    slot_poses = []
    for i, s in enumerate(slots):
        poses = _poses(s)
        slot_poses.append(poses)
        for pi, corners in enumerate(poses):
            for label, pos in zip(CORNERS, corners):
                contact.setdefault(pos, []).append((i, label, pi))
    # conservative slot adjacency: sharing any corner point at all
    neighbors = [set() for _ in range(n)]
    point_slots: dict = {}
    for i, s in enumerate(slots):
        for v in s:
            point_slots.setdefault(v, set()).add(i)
    for owners in point_slots.values():
        for i in owners:
            neighbors[i] |= owners
    for i in range(n):
        neighbors[i].discard(i)
    neighbors = [tuple(sorted(nb)) for nb in neighbors]

    nodes = 0
    node_cap = 0

    def connected(used: int) -> bool:
        """All unplaced slots form one component of the contact graph."""
        first = None
        for i in range(n):
            if not used & (1 << i):
                first = i
                break
        if first is None:
            return True
        seen = 1 << first
        stack = [first]
        count = 1
        while stack:
            i = stack.pop()
            for j in neighbors[i]:
                bit = 1 << j
                if not used & bit and not seen & bit:
                    seen |= bit
                    count += 1
                    stack.append(j)
        return count == n - bin(used).count("1")

    placements: list = []

    def extend(k: int, used: int, entry_point) -> bool:
        nonlocal nodes
        if k == chain.n_pieces:
            return True
        entry_label = chain.hinges[k - 1][1]
        options = [(i, pi) for (i, label, pi) in contact.get(entry_point, ())
                   if label == entry_label and not used & (1 << i)]
        exit_label = chain.hinges[k][0] if k < chain.n_pieces - 1 else None
        ranked = []
        for (i, pi) in options:
            corners = slot_poses[i][pi]
            if exit_label is None:
                ranked.append((0, i, pi, corners))
                continue
            exit_point = _corner_position(corners, exit_label)
            cnt = 0
            for (j, _label, _pi) in contact.get(exit_point, ()):
                if not used & (1 << j) and j != i:
                    cnt += 1
            ranked.append((cnt, i, pi, corners))
        ranked.sort(key=lambda t: (t[0], t[1], t[2]))
        for (_w, i, pi, corners) in ranked:
            nodes += 1
            if nodes > budget:
                raise BudgetExceeded(f"fold search exceeded {budget} nodes")
            if nodes > node_cap:
                raise _Stop
            now_used = used | (1 << i)
            if k % 8 == 7 and not connected(now_used):
                continue
            placements.append(Placement(i, corners))
            nxt = _corner_position(corners, exit_label) if exit_label is not None else None
            if extend(k + 1, now_used, nxt):
                return True
            placements.pop()
        return False

    starts = [(i, pi) for i in range(n) for pi in (0, 1)]
    for round_cap in (budget // max(len(starts), 1), budget):
        exhausted_everywhere = True
        for (i, pi) in starts:
            corners = slot_poses[i][pi]
            node_cap = min(budget, nodes + max(round_cap, 1))
            placements.clear()
            placements.append(Placement(i, corners))
            first_exit = chain.hinges[0][0] if chain.n_pieces > 1 else None
            nxt = _corner_position(corners, first_exit) if first_exit is not None else None
            nodes += 1
            if nodes > budget:
                raise BudgetExceeded(f"fold search exceeded {budget} nodes")
            try:
                if extend(1, 1 << i, nxt):
                    return FoldAssignment(tuple(placements))
            except _Stop:
                exhausted_everywhere = False
                continue
        if exhausted_everywhere:
            return None  # every start ran to exhaustion within its cap
    raise BudgetExceeded(f"fold search exceeded {budget} nodes")


def verify_fold(chain: HingedChain, cells, assignment: FoldAssignment,
                expected_cells: int | None = None) -> bool:
    """Structural check: bijection, true congruences, hinge coincidence."""
    slots = refine(cells, expected_cells)
    if len(assignment.placements) != chain.n_pieces or len(slots) != chain.n_pieces:
        return False
    used = set()
    for pl in assignment.placements:
        if not 0 <= pl.slot_index < len(slots):
            return False
        if pl.slot_index in used:
            return False
        used.add(pl.slot_index)
        slot = slots[pl.slot_index]
        r, p, q = pl.corners
        if r != slot.right or {p, q} != {slot.acute1, slot.acute2}:
            return False
    for k, (exit_label, entry_label) in enumerate(chain.hinges):
        exit_pos = _corner_position(assignment.placements[k].corners, exit_label)
        entry_pos = _corner_position(assignment.placements[k + 1].corners, entry_label)
        if exit_pos != entry_pos:
            return False
    return True


# -- rendering ----------------------------------------------------------------

def render_polyabolo(cells) -> VectorScene:
    """Filled cells plus their outlines."""
    scene = VectorScene()
    for c in sorted(set(check_cell(x) for x in cells)):
        tri = cell_triangle(c)
        scene.add_polygon([tuple(map(float, v)) for v in tri], "piece", filled=True)
    return scene


def render_chain_strip(chain: HingedChain) -> VectorScene:
    """The unfolded chain as a zigzag strip (the universal, letter-free view)."""
    import math
    h = math.sqrt(2.0) / 2.0
    scene = VectorScene()
    for k in range(chain.n_pieces):
        x0, x1 = k * h, (k + 1) * h
        apex_y = h / 2.0 if k % 2 == 0 else -h / 2.0
        tri = [(x0, 0.0), (x1, 0.0), ((x0 + x1) / 2.0, apex_y)]
        scene.add_polygon(tri, "piece", filled=True)
    for k in range(chain.n_pieces - 1):
        x = (k + 1) * h
        scene.add_circle((x, 0.0), 0.035, "hinge", filled=True)
    return scene


def render_fold(chain: HingedChain, cells, assignment: FoldAssignment) -> VectorScene:
    """Folded chain diagram: placed pieces with hinge dots."""
    scene = render_polyabolo(cells)
    for pl in assignment.placements:
        r, p, q = pl.corners
        scene.add_polyline([p, r, q], "chain")
    for k, (exit_label, _entry) in enumerate(chain.hinges):
        pos = _corner_position(assignment.placements[k].corners, exit_label)
        scene.add_circle(pos, 0.04, "hinge", filled=True)
    return scene
