"""Quartet formation moves.

A quartet occupies the 2x2 block whose bottom-left cell is (R, C). Slots are
numbered 0=bl, 1=br, 2=tl, 3=tr. A formation move shifts the block; each
knight either stays on a cell shared by both blocks or makes one knight move
into the new block.
"""
from __future__ import annotations

from itertools import permutations

SLOTS = ((0, 0), (0, 1), (1, 0), (1, 1))

DIAGONAL = ((1, 2), (1, -2), (-1, 2), (-1, -2), (2, 1), (2, -1), (-2, 1), (-2, -1))
STRAIGHT = ((1, 0), (-1, 0), (0, 1), (0, -1))
DOUBLE = ((2, 0), (-2, 0), (0, 2), (0, -2))


def _slot_map(dr, dc):
    stay, movers = {}, {}
    for s, (a, b) in enumerate(SLOTS):
        na, nb = a - dr, b - dc
        if 0 <= na <= 1 and 0 <= nb <= 1:
            stay[s] = SLOTS.index((na, nb))
            continue
        movers[s] = []
        for t, (x, y) in enumerate(SLOTS):
            jump = sorted((abs(x + dr - a), abs(y + dc - b)))
            if jump == [1, 2] and not (0 <= x + dr <= 1 and 0 <= y + dc <= 1):
                movers[s].append(t)
    free = [t for t in range(4) if t not in stay.values()]
    keys = list(movers)
    found = [p for p in permutations(free) if all(p[i] in movers[s] for i, s in enumerate(keys))]
    assert len(found) == 1, (dr, dc)
    m = dict(stay)
    m.update(zip(keys, found[0]))
    return tuple(m[s] for s in range(4))


# block shift -> new slot of the knight in each old slot
SLOT_MAP = {mv: _slot_map(*mv) for mv in DIAGONAL + STRAIGHT + DOUBLE}


def kind(mv) -> str:
    """Matching-algebra letter(s) for a formation move."""
    if mv in DIAGONAL:
        return "D"
    if mv in ((1, 0), (-1, 0)):
        return "V"
    if mv in ((0, 1), (0, -1)):
        return "H"
    if mv in ((2, 0), (-2, 0)):
        return "VV"
    if mv in ((0, 2), (0, -2)):
        return "HH"
    raise ValueError(mv)


def block_cells(pos):
    r, c = pos
    return [(r + a, c + b) for a, b in SLOTS]


def run_formation(start, moves):
    """Walk the quartet from block `start`.

    Returns (paths, blocks, slot) where paths[k] is the list of cells visited by
    the knight that started in slot k, and slot[k] is its final slot.
    """
    pos = start
    slot = [0, 1, 2, 3]
    paths = [[c] for c in block_cells(start)]
    blocks = [start]
    for mv in moves:
        sm = SLOT_MAP[mv]
        pos = (pos[0] + mv[0], pos[1] + mv[1])
        cells = block_cells(pos)
        for k in range(4):
            slot[k] = sm[slot[k]]
            c = cells[slot[k]]
            if c != paths[k][-1]:
                paths[k].append(c)
        blocks.append(pos)
    return paths, blocks, slot


def compose_slots(p, q):
    """Slot permutation of doing p then q."""
    return tuple(q[p[s]] for s in range(4))


def moves_slot_perm(moves):
    perm = (0, 1, 2, 3)
    for mv in moves:
        perm = compose_slots(perm, SLOT_MAP[mv])
    return perm
