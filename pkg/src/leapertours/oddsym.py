"""Odd boards missing a corner, and tours symmetric under quarter turns.

An odd w x h board (both odd) gets a closed tour of every cell but (0, 0): the
(w-1) x h tour is shifted right by one column and the strip along the left
edge is rewired by table lookups (see gadgets.ODD_*). Each rewired window keeps
the pairing of its boundary cells, so the result is still one cycle.

Four such tours, turned so their empty corners meet at the centre of a
2n x 2n board, are joined through the four centre cells into one tour whose
move set is invariant under a 90 degree rotation.
"""
from __future__ import annotations

from . import gadgets as G
from .board import KNIGHT, BoardDims, UnsupportedDims, is_leaper_move
from .tour import Tour
from .tour2d import build_wh

CORNER = (0, 0)
ODD_EDGE = ((0, 1), (2, 0))


def _norm(e):
    a, b = e
    return (a, b) if a <= b else (b, a)


def _windows(h):
    """(kind, row0, rows, flip) for the strip windows of a board of height h."""
    out = [("bottom", 0, G.ODD_BOTTOM_ROWS)]
    r0 = G.ODD_BOTTOM_ROWS
    while h - r0 - 4 >= G.ODD_MIN_TOP:
        out.append(("middle", r0, 4))
        r0 += 4
    out.append(("top", r0, h - r0))
    return out


def _rewire(edges, h, kind, r0, rows):
    strip = G.ODD_STRIP
    W = {(r, c) for r in range(r0, r0 + rows) for c in range(strip)} - {CORNER}
    if kind == "top":
        def to_rel(x):
            return (h - 1 - x[0], x[1])
        to_abs = to_rel
    else:
        def to_rel(x):
            return (x[0] - r0, x[1])

        def to_abs(x):
            return (x[0] + r0, x[1])
    inside = {e for e in edges if e[0] in W and e[1] in W}
    old = {_norm((to_rel(a), to_rel(b))) for a, b in inside}
    if kind == "bottom":
        cands = [G.ODD_BOTTOM]
    elif kind == "middle":
        cands = [G.ODD_MIDDLE]
    else:
        cands = [t for t in G.ODD_TOPS if t["rows"] == rows]
    for t in cands:
        if set(t["old"]) == old:
            edges -= inside
            edges |= {_norm((to_abs(a), to_abs(b))) for a, b in t["new"]}
            return
    raise UnsupportedDims(f"no left-edge rewiring for the {kind} window at row {r0} ({rows} rows)")


def _walk(edges, start, second):
    adj = {}
    for a, b in edges:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    assert all(len(v) == 2 for v in adj.values())
    seq = [start, second]
    while True:
        a, b = adj[seq[-1]]
        nxt = a if a != seq[-2] else b
        if nxt == start:
            break
        seq.append(nxt)
    if len(seq) != len(adj):
        raise AssertionError(f"rewired strip split the tour ({len(seq)} of {len(adj)} cells)")
    return seq


def build_odd(dims) -> Tour:
    """Closed tour of every cell except (0, 0) on a board with w > 16 and h > 12 both odd."""
    dims = dims if isinstance(dims, BoardDims) else BoardDims(dims)
    if dims.ndim != 2:
        raise UnsupportedDims("odd boards are two dimensional")
    h, w = dims.dims
    if w % 2 == 0 or h % 2 == 0 or w <= 16 or h <= 12:
        raise UnsupportedDims(f"need odd w > 16 and odd h > 12, got w={w} h={h}")
    base = build_wh(w - 1, h).cells
    n = len(base)
    edges = {_norm(((a[0], a[1] + 1), (b[0], b[1] + 1))) for a, b in zip(base, base[1:] + base[:1])}
    for kind, r0, rows in _windows(h):
        _rewire(edges, h, kind, r0, rows)
    assert _norm(ODD_EDGE) in edges
    cells = _walk(edges, *ODD_EDGE)
    assert len(cells) == n + h - 1
    return Tour(dims, cells, KNIGHT, True, (CORNER,))


def rotate90(cell, n):
    """Quarter turn of an n x n board about its centre."""
    return (cell[1], n - 1 - cell[0])


def build_symmetric(N: int) -> Tour:
    """Closed tour of the N x N board whose moves are invariant under quarter turns."""
    if N % 4 != 2:
        raise UnsupportedDims(f"quarter-turn symmetric tours need N = 2 mod 4, got {N}")
    n = N // 2
    if n <= 16:
        raise UnsupportedDims(f"quadrants of side {n} are too small (need > 16)")
    odd = build_odd(BoardDims((n, n)))
    # bottom-left quadrant, turned so its empty cell sits next to the centre
    q = [(n - 1 - r, n - 1 - c) for r, c in odd.cells]
    p0 = (n - 1 - ODD_EDGE[0][0], n - 1 - ODD_EDGE[0][1])
    q0 = (n - 1 - ODD_EDGE[1][0], n - 1 - ODD_EDGE[1][1])
    # open the quadrant cycle at the edge p0-q0: a path starting at q0, ending at p0
    i = q.index(q0)
    path = q[i:] + q[:i]
    if path[-1] != p0:
        path = [path[0]] + path[1:][::-1]
    assert path[0] == q0 and path[-1] == p0
    centre = [(n - 1, n - 1)]
    for _ in range(3):
        centre.append(rotate90(centre[-1], N))
    cells = []
    for k in range(4):
        # centre cell k+1 -> quadrant k path -> centre cell k+2 comes next round
        cells.append(centre[(k + 1) % 4])
        cells.extend(path)
        path = [rotate90(c, N) for c in path]
    # the walk above visits centre[1], Q0, centre[2], Q1, centre[3], Q2, centre[0], Q3
    for a, b in zip(cells, cells[1:] + cells[:1]):
        assert is_leaper_move(a, b), (a, b)
    return Tour(BoardDims((N, N)), cells, KNIGHT, True)


def rotated_move_set(tour: Tour):
    N = tour.dims.dims[0]
    return {frozenset(rotate90(c, N) for c in s) for s in tour.move_set()}


def is_quarter_symmetric(tour: Tour) -> bool:
    return tour.dims.dims[0] == tour.dims.dims[1] and rotated_move_set(tour) == tour.move_set()
