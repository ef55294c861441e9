"""Closed giraffe (1,4) tours on w x h boards with w = 32k+20 and h = 8l+14.

Sixteen giraffes travel as a 4x4 block along bands of slope -1/4. Bands turn
around with heels along the bottom edge (rows 0..7), half-turned heels along
the top edge, and four single-row steps up along the left and right edges.
One extra gadget handles the top-left corner, and two junctions close the
sixteen parallel paths into one cycle.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Tuple

from . import gadgets as G
from .board import GIRAFFE, BoardDims, UnsupportedDims

SIZE = 4
GSLOTS = tuple((a, b) for a in range(SIZE) for b in range(SIZE))

UL = (1, -4)
DR = (-1, 4)
UP = (1, 0)
U_MOVES = (UP,) * 4


def _is_giraffe(d):
    return sorted((abs(d[0]), abs(d[1]))) == [1, 4]


def _gslot_map(v):
    """New slot for each old slot after shifting the block by v, or None.

    Giraffes on cells shared by both blocks stay put; the rest must be matched
    one-to-one onto the newly covered cells by giraffe moves, and that
    matching has to be unique.
    """
    dr, dc = v
    new = {(a + dr, b + dc) for a, b in GSLOTS}
    stay, dep = {}, []
    for s, (a, b) in enumerate(GSLOTS):
        if (a, b) in new:
            stay[s] = GSLOTS.index((a - dr, b - dc))
        else:
            dep.append(s)
    arr = [c for c in sorted(new) if c not in GSLOTS]
    found = []

    def rec(i, used, cur):
        if len(found) > 1:
            return
        if i == len(dep):
            found.append(dict(cur))
            return
        a, b = GSLOTS[dep[i]]
        for c in arr:
            if c not in used and _is_giraffe((c[0] - a, c[1] - b)):
                used.add(c)
                cur[dep[i]] = c
                rec(i + 1, used, cur)
                used.discard(c)
                del cur[dep[i]]

    rec(0, set(), {})
    if len(found) != 1:
        return None
    m = dict(stay)
    for s, c in found[0].items():
        m[s] = GSLOTS.index((c[0] - dr, c[1] - dc))
    return tuple(m[s] for s in range(16))


GIRAFFE_SLOT_MAP: Dict[Tuple[int, int], Tuple[int, ...]] = {}
for _dr in range(-5, 6):
    for _dc in range(-5, 6):
        if (_dr, _dc) != (0, 0):
            _m = _gslot_map((_dr, _dc))
            if _m is not None:
                GIRAFFE_SLOT_MAP[(_dr, _dc)] = _m

IDENTITY = tuple(range(16))
# swap formation columns 1<->2 and 3<->4
COLUMN_SWAP = tuple(4 * a + (b ^ 1) for a, b in GSLOTS)


def block_cells(pos):
    return [(pos[0] + a, pos[1] + b) for a, b in GSLOTS]


def compose(p, q):
    """p then q."""
    return tuple(q[p[s]] for s in range(16))


def moves_perm(moves):
    perm = IDENTITY
    for mv in moves:
        perm = compose(perm, GIRAFFE_SLOT_MAP[mv])
    return perm


@dataclass(frozen=True)
class GiraffeFormationState:
    """ids[slot] is the giraffe standing at that slot (slot = 4*row + col)."""
    ids: Tuple[int, ...] = IDENTITY

    def __post_init__(self):
        if sorted(self.ids) != list(range(16)):
            raise ValueError("formation state must be a permutation of 16 giraffes")

    def apply(self, perm) -> "GiraffeFormationState":
        out = [0] * 16
        for s, g in enumerate(self.ids):
            out[perm[s]] = g
        return GiraffeFormationState(tuple(out))

    def grid(self):
        return [list(self.ids[4 * a:4 * a + 4]) for a in range(4)]


def _heel_blocks(ce):
    pos = (G.GIRAFFE_STRIP, ce)
    out = [pos]
    for dr, dc in G.GIRAFFE_HEEL:
        pos = (pos[0] + dr, pos[1] + dc)
        out.append(pos)
    return out


def _corner_blocks(w):
    pos = (G.GIRAFFE_STRIP, w - 16)
    out = [pos]
    for dr, dc in G.GIRAFFE_CORNER:
        pos = (pos[0] + dr, pos[1] + dc)
        out.append(pos)
    return out


def _flip_path(blocks, h, w):
    """Half-turn a block path and run it backwards."""
    return [(h - 4 - r, w - 4 - c) for r, c in blocks][::-1]


def giraffe_state_effect(seq: str):
    """Slot permutation of U, HEEL or FLIPPED_HEEL (giraffe in slot s ends in slot p[s])."""
    if seq == "U":
        return moves_perm(U_MOVES)
    if seq == "HEEL":
        return moves_perm(G.GIRAFFE_HEEL)
    if seq == "FLIPPED_HEEL":
        blocks = _flip_path(_heel_blocks(0), 60, 60)
        return moves_perm([(b[0] - a[0], b[1] - a[1]) for a, b in zip(blocks, blocks[1:])])
    raise ValueError(f"unknown formation sequence {seq!r}")


def check_dims(w, h):
    if w < 52 or (w - 20) % 32 or h < 22 or (h - 14) % 8:
        raise UnsupportedDims(f"giraffe tours need w = 32k+20 and h = 8l+14 (k, l >= 1), got w={w} h={h}")
    return (w - 20) // 32, (h - 14) // 8


def formation_walk(w, h) -> List[Tuple[Tuple[int, int], str]]:
    """Block positions from the bottom-left junction to the top-right one, with labels."""
    check_dims(w, h)
    top = h - 12
    strip = G.GIRAFFE_STRIP
    r0, c0 = G.GIRAFFE_BL_IFACE
    walk = [((r0, c0), "junction"), ((r0 + 1, c0 - 4), "D")]
    going_up = True  # the band we are on runs up-left
    while True:
        R, C = walk[-1][0]
        if going_up:
            if C == 0 and R + 4 <= top:
                seq = [(R + i, 0) for i in range(1, 5)]
                tag = "U"
            elif C == 0 and R == top - 1:
                seq = _flip_path(_corner_blocks(w), h, w)[1:]
                tag = "corner"
            elif R == top:
                seq = _flip_path(_heel_blocks(w - 20 - C), h, w)[1:]
                tag = "F"
            else:
                raise AssertionError(f"band ended at {(R, C)}")
            assert seq[0] != (R, C)
            walk += [(b, tag) for b in seq]
            R, C = walk[-1][0]
            while R - 1 >= strip and C + 4 <= w - 4:
                R, C = R - 1, C + 4
                walk.append(((R, C), "D"))
        else:
            if R == strip and C + 31 <= w - 1:
                walk += [(b, "H") for b in _heel_blocks(C)[1:]]
            elif C == w - 4 and R + 4 <= top:
                walk += [((R + i, C), "U") for i in range(1, 5)]
            else:
                return walk
            R, C = walk[-1][0]
            while R + 1 <= top and C - 4 >= 0:
                R, C = R + 1, C - 4
                walk.append(((R, C), "D"))
        going_up = not going_up


def transition_counts(w, h):
    walk = formation_walk(w, h)
    out = {}
    prev = None
    for _, tag in walk:
        if tag != prev and tag not in ("D", "junction"):
            out[tag] = out.get(tag, 0) + 1
        prev = tag
    # runs of U steps come in fours
    if "U" in out:
        out["U"] = sum(1 for _, t in walk if t == "U") // 4
    return out


def run(blocks):
    """paths[g] = cells visited by the giraffe that started in slot g; slot[g] = its last slot."""
    slot = list(range(16))
    paths = [[c] for c in block_cells(blocks[0])]
    for a, b in zip(blocks, blocks[1:]):
        sm = GIRAFFE_SLOT_MAP[(b[0] - a[0], b[1] - a[1])]
        cells = block_cells(b)
        for g in range(16):
            slot[g] = sm[slot[g]]
            c = cells[slot[g]]
            if c != paths[g][-1]:
                paths[g].append(c)
    return paths, slot


def _tr_paths(w, h):
    return [[(h - 1 - r, w - 1 - c) for r, c in p] for p in G.GIRAFFE_TR_PATHS]


def interface_pairs(paths, base):
    """Junction paths as pairs of formation slots at the interface block `base`."""
    out = []
    for p in paths:
        a, b = p[0], p[-1]
        out.append(tuple(sorted((4 * (a[0] - base[0]) + a[1] - base[1],
                                 4 * (b[0] - base[0]) + b[1] - base[1]))))
    return sorted(out)


def union_is_cycle(bl_pairs, tr_pairs, perm) -> bool:
    """Do the two junction matchings, with bottom-left slots carried by perm, form one 16-cycle?"""
    edges = [(("B", s), ("T", perm[s])) for s in range(16)]
    edges += [(("B", a), ("B", b)) for a, b in bl_pairs]
    edges += [(("T", a), ("T", b)) for a, b in tr_pairs]
    try:
        return len(_cycle(edges, ("B", 0))) == 32
    except AssertionError:
        return False


def _cycle(edges, start):
    adj = {}
    for a, b in edges:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    bad = [c for c, v in adj.items() if len(v) != 2]
    if bad:
        raise AssertionError(f"cells with degree != 2: {bad[:5]}")
    seq = [start, min(adj[start])]
    while True:
        a, b = adj[seq[-1]]
        nxt = a if a != seq[-2] else b
        if nxt == start:
            break
        seq.append(nxt)
    if len(seq) != len(adj):
        raise AssertionError(f"pieces form several cycles ({len(seq)} of {len(adj)} cells)")
    return seq


def build_giraffe(dims):
    """Closed giraffe tour on dims = (h, w) with w = 32k+20 and h = 8l+14."""
    from .tour import Tour

    dims = dims if isinstance(dims, BoardDims) else BoardDims(dims)
    if dims.ndim != 2:
        raise UnsupportedDims("giraffe tours are two dimensional")
    h, w = dims.dims
    check_dims(w, h)
    walk = [b for b, _ in formation_walk(w, h)]
    blocks = walk[:len(walk) - G.GIRAFFE_TR_TAIL + 1]
    paths, _ = run(blocks)
    edges = []
    for p in paths + [list(q) for q in G.GIRAFFE_BL_PATHS] + _tr_paths(w, h):
        edges += zip(p, p[1:])
    cells = _cycle(edges, (0, 0))
    return Tour(dims, cells, GIRAFFE, True)
