"""Constant-time index <-> cell lookup for planned 2D tours.

The formation path is cut into units of two bands (run, transition, run,
transition). Consecutive units with the same gadgets whose positions and run
lengths change by a fixed amount per unit are folded into one group. The
number of groups depends only on which gadget kinds occur, not on the board
size, so a lookup scans a constant-size table and then does arithmetic.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Dict, List, Tuple

from .formation import SLOT_MAP, block_cells, run_formation

_GADGET_CACHE: Dict[tuple, tuple] = {}


def _gadget(moves):
    """Per entry slot: (new cell offsets, exit slot); plus offset -> (slot, pos)."""
    hit = _GADGET_CACHE.get(moves)
    if hit is None:
        paths, _, slot = run_formation((0, 0), moves)
        per = tuple((tuple(paths[s][1:]), slot[s]) for s in range(4))
        where = {}
        for s in range(4):
            for pos, c in enumerate(paths[s][1:]):
                where[c] = (s, pos)
        hit = (per, where)
        _GADGET_CACHE[moves] = hit
    return hit


@dataclass
class Group:
    seg0: int  # index of first segment
    nseg: int  # segments per unit
    units: int
    sigs: tuple
    base: tuple  # params of unit 0, flattened
    delta: tuple
    perm: tuple  # slot permutation of one unit
    gadget_gain: tuple  # per entry slot: cells gained in the unit's gadgets
    run_a: int  # run moves in unit t: run_a + run_b * t
    run_b: int
    start_slot: tuple  # knight -> slot at group start
    start_count: tuple  # knight -> cells already visited before the group


def _params(seg):
    return seg.params()


def _unit_params(segs):
    out = []
    for s in segs:
        out.extend(_params(s))
    return tuple(out)


def _perm_pow(perm, t):
    p = (0, 1, 2, 3)
    for _ in range(t % 12):  # every element of S4 has order dividing 12
        p = tuple(perm[p[s]] for s in range(4))
    return p


class TourIndex:
    def __init__(self, plan, kpaths_len, order, juncs):
        self.plan = plan
        segs = plan.segments
        self.segs = segs
        self.groups: List[Group] = []
        self._build_groups()
        self.klen = kpaths_len
        # pieces of the cycle, with global offsets
        self.order = order
        self.offsets = []
        off = 0
        for kind_, idx, lo, hi, step in order:
            self.offsets.append(off)
            off += (hi - lo) * step + 1 if (hi - lo) * step >= 0 else 0
        self.length = off
        self.juncs = juncs
        self.jpos = {}
        for pi, (kind_, idx, lo, hi, step) in enumerate(order):
            if kind_ != "j":
                continue
            n = (hi - lo) * step + 1
            for q in range(max(n, 0)):
                self.jpos[juncs[idx][lo + q * step]] = self.offsets[pi] + q
        self.kpiece = {}
        for pi, (kind_, idx, lo, hi, step) in enumerate(order):
            if kind_ == "k":
                self.kpiece[idx] = pi

    # ---- grouping ----
    def _build_groups(self):
        segs = self.segs
        unit_len = 4
        starts = list(range(0, len(segs), unit_len))
        units = [segs[i:i + unit_len] for i in starts]
        slot = (0, 1, 2, 3)
        count = (0, 0, 0, 0)
        j = 0
        while j < len(units):
            u0 = units[j]
            sig = tuple(s.signature() for s in u0)
            p0 = _unit_params(u0)
            m = 1
            delta = tuple(0 for _ in p0)
            if j + 1 < len(units) and len(units[j + 1]) == len(u0):
                sig1 = tuple(s.signature() for s in units[j + 1])
                if sig1 == sig:
                    delta = tuple(b - a for a, b in zip(p0, _unit_params(units[j + 1])))
                    m = 2
                    while j + m < len(units) and len(units[j + m]) == len(u0):
                        um = units[j + m]
                        if tuple(s.signature() for s in um) != sig:
                            break
                        if _unit_params(um) != tuple(a + m * d for a, d in zip(p0, delta)):
                            break
                        m += 1
            # unit slot permutation and gadget gains
            perm = (0, 1, 2, 3)
            gain = [0, 0, 0, 0]
            run_a = run_b = 0
            k = 0
            for s in u0:
                if s.kind == "diag":
                    run_a += len(s.moves)
                    run_b += delta[k + 2]
                    k += 3
                else:
                    per, _ = _gadget(s.moves)
                    for s0 in range(4):
                        cur = perm[s0]
                        gain[s0] += len(per[cur][0])
                    perm = tuple(per[perm[s0]][1] for s0 in range(4))
                    k += 2
            g = Group(starts[j], len(u0), m, sig, p0, delta, perm, tuple(gain), run_a, run_b, slot, count)
            self.groups.append(g)
            # advance knights over the whole group
            slot = tuple(self._slot_at(g, kn, m) for kn in range(4))
            count = tuple(g.start_count[kn] + self._cum(g, kn, m) for kn in range(4))
            j += m

    def _slot_at(self, g, kn, t):
        return _perm_pow(g.perm, t)[g.start_slot[kn]]

    def _cum(self, g, kn, t):
        """Cells gained by knight kn during units 0..t-1 of group g."""
        s = g.start_slot[kn]
        cyc = [s]
        while True:
            nxt = g.perm[cyc[-1]]
            if nxt == s:
                break
            cyc.append(nxt)
        L = len(cyc)
        full = sum(g.gadget_gain[x] for x in cyc)
        part = sum(g.gadget_gain[cyc[i]] for i in range(t % L))
        return g.run_a * t + g.run_b * (t * (t - 1) // 2) + (t // L) * full + part

    def _unit_segments(self, g, t):
        """Segment records of unit t: list of (kind, start, moves)."""
        out = []
        k = 0
        vals = [a + t * d for a, d in zip(g.base, g.delta)]
        for sig in g.sigs:
            if sig[0] == "diag":
                r, c, n = vals[k:k + 3]
                out.append(("diag", (r, c), sig[1], n))
                k += 3
            else:
                r, c = vals[k:k + 2]
                out.append(("gadget", (r, c), sig[1], None))
                k += 2
        return out

    def _find_unit(self, g, kn, j):
        """Largest t with cum(t) <= j."""
        L = 1
        s = g.start_slot[kn]
        x = g.perm[s]
        while x != s:
            x = g.perm[x]
            L += 1
        avg = sum(g.gadget_gain[_perm_pow(g.perm, i)[s]] for i in range(L)) / L
        a = g.run_b / 2.0
        b = g.run_a + avg - g.run_b / 2.0
        if abs(a) < 1e-12:
            t = int(j / b) if b > 0 else 0
        else:
            disc = b * b + 4 * a * j
            t = int((-b + max(disc, 0.0) ** 0.5) / (2 * a)) if disc >= 0 else g.units - 1
        t = max(0, min(g.units - 1, t))
        while t > 0 and self._cum(g, kn, t) > j:
            t -= 1
        while t + 1 < g.units and self._cum(g, kn, t + 1) <= j:
            t += 1
        return t

    # ---- knight-local lookups ----
    def knight_cell(self, kn, j):
        """Cell number j (j >= 1) on the path of knight kn."""
        gi = 0
        for i, g in enumerate(self.groups):
            if g.start_count[kn] < j:
                gi = i
            else:
                break
        g = self.groups[gi]
        jj = j - g.start_count[kn]
        t = self._find_unit(g, kn, jj - 1)
        rem = jj - self._cum(g, kn, t)
        slot = self._slot_at(g, kn, t)
        for kind_, start, mv, n in self._unit_segments(g, t):
            if kind_ == "diag":
                if rem <= n:
                    blk = (start[0] + rem * mv[0], start[1] + rem * mv[1])
                    return block_cells(blk)[slot]
                rem -= n
            else:
                per, _ = _gadget(mv)
                new, out_slot = per[slot]
                if rem <= len(new):
                    dr, dc = new[rem - 1]
                    return (start[0] + dr, start[1] + dc)
                rem -= len(new)
                slot = out_slot
        raise IndexError(j)

    def knight_index(self, seg_index, slot_at_entry, pos):
        """Knight and its path index for the pos-th new cell (0-based) of a segment."""
        for g in self.groups:
            if g.seg0 <= seg_index < g.seg0 + g.units * g.nseg:
                break
        else:
            raise IndexError(seg_index)
        t, within = divmod(seg_index - g.seg0, g.nseg)
        unit = self._unit_segments(g, t)
        for kn in range(4):
            slot = self._slot_at(g, kn, t)
            idx = g.start_count[kn] + self._cum(g, kn, t)
            for q in range(within):
                kind_, start, mv, n = unit[q]
                if kind_ == "diag":
                    idx += n
                else:
                    new, slot = _gadget(mv)[0][slot]
                    idx += len(new)
            if slot == slot_at_entry:
                return kn, idx + pos + 1
        raise AssertionError

    def segment_record(self, seg_index):
        for g in self.groups:
            if g.seg0 <= seg_index < g.seg0 + g.units * g.nseg:
                t, within = divmod(seg_index - g.seg0, g.nseg)
                return self._unit_segments(g, t)[within]
        raise IndexError(seg_index)

    # ---- public ----
    def cell_at(self, index):
        if not 0 <= index < self.length:
            raise IndexError(f"index {index} outside [0, {self.length})")
        pi = 0
        for i, off in enumerate(self.offsets):
            if off <= index:
                pi = i
        kind_, idx, lo, hi, step = self.order[pi]
        q = index - self.offsets[pi]
        local = lo + q * step
        if kind_ == "j":
            return self.juncs[idx][local]
        return self.knight_cell(idx, local)

    def index_of(self, cell):
        cell = tuple(cell)
        hit = self.jpos.get(cell)
        if hit is not None:
            return hit
        r, c = cell
        u = c + 2 * r
        b = u - ((u - 2) % 4)
        i = (b - 10) // 4
        nb = len(self.plan.bands)
        # run of band i
        if 0 <= i < nb:
            kind_, start, mv, n = self.segment_record(2 * i)
            R = r if u - b < 2 else r - 1
            q = (R - start[0]) * mv[0]
            C = b - 2 * R
            if 1 <= q <= n and (start[0] + q * mv[0], start[1] + q * mv[1]) == (R, C):
                slot = 2 * (r - R) + (c - C)
                return self._global(*self.knight_index(2 * i, slot, q - 1))
        for ti in range(max(0, i - 3), min(nb - 1, i + 3)):
            kind_, start, mv, n = self.segment_record(2 * ti + 1)
            per, where = _gadget(mv)
            hit = where.get((r - start[0], c - start[1]))
            if hit is not None:
                return self._global(*self.knight_index(2 * ti + 1, hit[0], hit[1]))
        raise KeyError(f"cell {cell} not found")

    def _global(self, kn, j):
        pi = self.kpiece[kn]
        kind_, idx, lo, hi, step = self.order[pi]
        return self.offsets[pi] + (j - lo) * step
