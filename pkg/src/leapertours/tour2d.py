"""Closed knight's tours on w x h boards (w even, w >= 16, h >= 12).

Four knights travel in a 2x2 formation along diagonal bands of slope -1/2,
zigzagging between a junction in the bottom-left corner and one in the
top-right corner. The two junctions tie the four parallel knight paths into a
single cycle.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from . import gadgets as G
from .board import KNIGHT, BoardDims, UnsupportedDims
from .formation import block_cells, moves_slot_perm, run_formation, kind
from .matching import compose, effect_of_slot_perm, matching_of_pairs, Matching
from .tour import Tour, transpose_cells

UL = (1, -2)
DR = (-1, 2)
UP2 = ((2, 0),)


@dataclass(frozen=True)
class Segment:
    kind: str  # "diag" or "gadget"
    start: Tuple[int, int]  # block where the segment begins
    moves: Tuple[Tuple[int, int], ...]  # full move list
    label: str = ""

    @property
    def end(self):
        r, c = self.start
        for dr, dc in self.moves:
            r, c = r + dr, c + dc
        return (r, c)

    def signature(self):
        if self.kind == "diag":
            return ("diag", self.moves[0] if self.moves else None)
        return ("gadget", self.moves)

    def params(self):
        if self.kind == "diag":
            return (self.start[0], self.start[1], len(self.moves))
        return (self.start[0], self.start[1])


@dataclass
class JunctionPlacement:
    name: str
    corner: str  # "BOTTOM_LEFT" / "TOP_RIGHT"
    height: int
    paths: Tuple[Tuple[Tuple[int, int], ...], ...]  # in board coordinates
    iface: Tuple[int, int]  # interface block in board coordinates

    @property
    def region(self):
        return {c for p in self.paths for c in p}

    def matching(self):
        cells = block_cells(self.iface)
        pairs = [(cells.index(p[0]), cells.index(p[-1])) for p in self.paths]
        return matching_of_pairs(pairs)


@dataclass
class TourPlan:
    dims: BoardDims
    w: int
    h: int
    transposed: bool
    junction_height: int
    corner_ids: Dict[str, int]
    segments: List[Segment]
    bl: JunctionPlacement
    tr: JunctionPlacement
    bands: List[int] = field(default_factory=list)
    _index: object = None

    @property
    def length(self):
        return self.w * self.h

    @property
    def formation_moves(self):
        out = []
        for s in self.segments:
            out.extend(s.moves)
        return out

    def inter_junction_effect(self):
        letters = "".join(kind(m) for m in self.formation_moves).replace("D", "")
        return compose(letters)


def _d_of(w, first):
    # the pair base in [w-6, w] congruent to `first` mod 8
    for u in range(w - 6, w + 1):
        if (u - first) % 8 == 0:
            return u
    raise AssertionError


def _edge_transitions(w, pairs, narrow_first=False):
    """Transitions along the bottom/right edges for down-right bands in `pairs`.

    Returns {u: Segment}; each segment goes from a block of band u to a block of
    band u+4.
    """
    out = {}
    if not pairs:
        return out
    uc = _d_of(w, pairs[0])
    d = w - uc
    for u in pairs:
        if u + 8 <= w:
            out[u] = Segment("gadget", (G.HEEL_ENTRY_R, u - 2 * G.HEEL_ENTRY_R), G.HEEL, "heel")
            continue
        part = None
        for off, ka, mv, _kb in G.CORNERS[d]:
            if u == uc + off and uc >= pairs[0]:
                part = (ka, mv)
        if part is not None:
            ka, mv = part
            out[u] = Segment("gadget", (ka, u - 2 * ka), mv, f"corner{d}")
        elif narrow_first and u == pairs[0]:
            out[u] = Segment("gadget", (3, u - 6), ((1, 2),), "narrow")
        else:
            assert u >= w + 2, (w, u)
            r = (u - w + 2) // 2
            out[u] = Segment("gadget", (r, w - 2), UP2, "edge")
    return out


def _rot_block(b, w, h):
    return (h - 2 - b[0], w - 2 - b[1])


def _rot_cell(c, w, h):
    return (h - 1 - c[0], w - 1 - c[1])


def junction_height(w, h):
    return 5 + ((w // 2 + h - 1) % 4)


def bottom_right_id(w):
    return (w // 2 + 2) % 4


def top_left_id(h):
    return (3 - h) % 4


def plan(dims) -> TourPlan:
    dims = dims if isinstance(dims, BoardDims) else BoardDims(dims)
    if dims.ndim != 2:
        raise UnsupportedDims("2D builder needs two dimensions")
    h, w = dims.dims
    transposed = False
    if w % 2 == 1:
        if h % 2 == 1:
            raise UnsupportedDims("both sides odd: no closed tour covers the board")
        w, h = h, w
        transposed = True
    if w < 16 or h < 12:
        raise UnsupportedDims(f"need even side >= 16 and other side >= 12, got {dims.dims}")
    return _plan_wh(dims, w, h, transposed)


def _plan_wh(dims, w, h, transposed, bl_name="BL5H"):
    umax = 2 * h + w - 3
    H = junction_height(w, h)
    u_last = umax - 2 * H - 3
    assert u_last % 8 == 2, (w, h, u_last)
    bands = list(range(10, u_last + 1, 4))

    narrow = 2 * H + 4 > w and (w, H) in ((16, 7), (18, 8))
    low = _edge_transitions(w, list(range(14, u_last - 3, 8)))
    rot_pairs = sorted(umax - 7 - u for u in range(10, u_last - 3, 8))
    top_rot = _edge_transitions(w, rot_pairs, narrow_first=narrow)

    trans = {}
    for u, seg in low.items():
        trans[u] = seg
    for x, seg in top_rot.items():
        u = umax - 7 - x
        start = _rot_block(seg.end, w, h)
        trans[u] = Segment("gadget", start, tuple(reversed(seg.moves)), seg.label + "_top")

    # junctions
    blj = G.JUNCTIONS[bl_name]
    bl = JunctionPlacement(bl_name, "BOTTOM_LEFT", blj["height"], blj["paths"], blj["iface"])
    if narrow:
        tr_name = f"TR{H}V_w{w}"
    else:
        tr_name = f"TR{H}V"
    trj = G.JUNCTIONS[tr_name]
    tr = JunctionPlacement(
        tr_name, "TOP_RIGHT", trj["height"],
        tuple(tuple(_rot_cell(c, w, h) for c in p) for p in trj["paths"]),
        _rot_block(trj["iface"], w, h),
    )

    segments = []
    cur = bl.iface
    for i, u in enumerate(bands):
        if i + 1 < len(bands):
            nxt = trans[u].start
        else:
            nxt = tr.iface
        direction = UL if i % 2 == 0 else DR
        n = (nxt[0] - cur[0]) * direction[0]
        assert n >= 0 and (cur[0] + n * direction[0], cur[1] + n * direction[1]) == nxt, (w, h, u, cur, nxt)
        segments.append(Segment("diag", cur, (direction,) * n, f"band{u}"))
        if i + 1 < len(bands):
            segments.append(trans[u])
            cur = trans[u].end
    return TourPlan(
        dims=dims, w=w, h=h, transposed=transposed, junction_height=H,
        corner_ids={"bottom_right": bottom_right_id(w), "top_left": top_left_id(h)},
        segments=segments, bl=bl, tr=tr, bands=bands,
    )


def _pieces(p: TourPlan):
    """Knight paths and junction paths, plus the order in which the cycle uses them."""
    kpaths, blocks, slot = run_formation(p.bl.iface, p.formation_moves)
    assert blocks[-1] == p.tr.iface
    juncs = [list(x) for x in p.bl.paths] + [list(x) for x in p.tr.paths]
    order = cycle_order(kpaths, juncs, (0, 0))
    return kpaths, juncs, order


class NotSingleCycle(ValueError):
    pass


def cycle_order(kpaths, juncs, start):
    """Walk the cycle formed by knight paths and junction paths.

    Knight paths share their two endpoints with junction paths. The walk starts
    at `start` (a cell of one of the first two junction paths) heading to its
    lexicographically smaller neighbour. Returns a list of
    (kind, idx, lo, hi, step) pieces with inclusive index ranges.
    """
    jend = {}
    for j, path in enumerate(juncs):
        jend[path[0]] = j
        jend[path[-1]] = j
    kend = {}
    for k, path in enumerate(kpaths):
        kend[path[0]] = k
        kend[path[-1]] = k
    j0 = next(j for j in range(2) if start in juncs[j])
    path = juncs[j0]
    i0 = path.index(start)
    nbrs = []
    if i0 > 0:
        nbrs.append((path[i0 - 1], -1))
    if i0 + 1 < len(path):
        nbrs.append((path[i0 + 1], +1))
    step = min(nbrs)[1]
    order = []
    if step > 0:
        order.append(("j", j0, i0, len(path) - 1, 1))
        end = path[-1]
    else:
        order.append(("j", j0, i0, 0, -1))
        end = path[0]
    while True:
        k = kend[end]
        kp = kpaths[k]
        if kp[0] == end:
            order.append(("k", k, 1, len(kp) - 2, 1))
            end = kp[-1]
        else:
            order.append(("k", k, len(kp) - 2, 1, -1))
            end = kp[0]
        j = jend[end]
        jp = juncs[j]
        if j == j0:
            if jp[0] == end:
                order.append(("j", j, 0, i0 - 1, 1))
            else:
                order.append(("j", j, len(jp) - 1, i0 + 1, -1))
            break
        if jp[0] == end:
            order.append(("j", j, 0, len(jp) - 1, 1))
            end = jp[-1]
        else:
            order.append(("j", j, len(jp) - 1, 0, -1))
            end = jp[0]
    used = sum(1 for o in order if o[0] == "k")
    if used != len(kpaths):
        raise NotSingleCycle(f"cycle uses {used} of {len(kpaths)} knight paths")
    return order


def materialize_order(kpaths, juncs, order):
    cells = []
    for kind_, idx, lo, hi, step in order:
        src = juncs[idx] if kind_ == "j" else kpaths[idx]
        cells.extend(src[i] for i in range(lo, hi + step, step))
    return cells


def _materialize(p: TourPlan):
    return materialize_order(*_pieces(p))


def build(dims) -> Tour:
    p = plan(dims)
    return build_from_plan(p)


def build_from_plan(p: TourPlan) -> Tour:
    cells = _materialize(p)
    if p.transposed:
        cells = transpose_cells(cells)
    return Tour(dims=p.dims, cells=cells, leaper=KNIGHT, closed=True)


def build_wh(w: int, h: int) -> Tour:
    return build(BoardDims.wh(w, h))


def _tour_index(p: TourPlan):
    if p._index is None:
        from .index2d import TourIndex
        kpaths, juncs, order = _pieces(p)
        p._index = TourIndex(p, [len(k) for k in kpaths], order, juncs)
    return p._index


def cell_at(p: TourPlan, index: int):
    cell = _tour_index(p).cell_at(index)
    return (cell[1], cell[0]) if p.transposed else cell


def index_of(p: TourPlan, cell) -> int:
    cell = tuple(cell)
    if not p.dims.contains(cell):
        raise IndexError(f"cell {cell} outside the board")
    if p.transposed:
        cell = (cell[1], cell[0])
    return _tour_index(p).index_of(cell)


def heel_metrics(band_steps: int = 8):
    """(turns, crossings) charged to one heel.

    Heels repeat every 8 columns along an edge, so the heel is measured inside
    a periodic strip: each knight arrives on a down-right diagonal and leaves
    on an up-left one, and `band_steps` diagonal steps of both bands are kept
    so that crossings between the heel and the diagonals are seen. Crossings
    are counted inside one period and against the next three periods.
    """
    from .metrics import segments_cross

    ta, tb = G.HEEL_ENTRY_R, G.HEEL_EXIT_R
    paths, _, _ = run_formation((ta, -2 * ta), G.HEEL)
    turns = 0
    segs = []
    for p in paths:
        dirs = [DR] + [(b[0] - a[0], b[1] - a[1]) for a, b in zip(p, p[1:])] + [UL]
        turns += sum(1 for a, b in zip(dirs, dirs[1:]) if a != b)
        segs += list(zip(p, p[1:]))
    for r in range(ta, ta + band_steps):
        segs += list(zip(block_cells((r + 1, -2 * r - 2)), block_cells((r, -2 * r))))
    for r in range(tb, tb + band_steps):
        segs += list(zip(block_cells((r, 4 - 2 * r)), block_cells((r + 1, 2 - 2 * r))))

    def shifted(k):
        return [((a[0], a[1] + 8 * k), (b[0], b[1] + 8 * k)) for a, b in segs]

    crossings = sum(segments_cross(s, t) for i, s in enumerate(segs) for t in segs[i + 1:])
    for k in (1, 2, 3):
        crossings += sum(segments_cross(s, t) for s in segs for t in shifted(k))
    return turns, crossings
