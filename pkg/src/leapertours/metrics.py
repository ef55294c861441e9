"""Turn and crossing counts of a tour."""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations

import numpy as np


@dataclass
class MetricsReport:
    turns: int
    crossings: int | None

    def to_dict(self):
        return {"turns": self.turns, "crossings": self.crossings}


def _seq(tour):
    return tour.cells if hasattr(tour, "cells") else list(tour)


def _closed(tour):
    return getattr(tour, "closed", True)


def count_turns(tour) -> int:
    cells = _seq(tour)
    n = len(cells)
    closed = _closed(tour)
    turns = 0
    for i in range(*((0, n) if closed else (1, n - 1))):
        a, b, c = cells[i - 1], cells[i], cells[(i + 1) % n]
        u = [y - x for x, y in zip(a, b)]
        v = [y - x for x, y in zip(b, c)]
        # collinear iff every 2x2 minor vanishes
        if any(u[p] * v[q] - u[q] * v[p] for p, q in combinations(range(len(u)), 2)):
            turns += 1
    return turns


def _segments(tour):
    cells = _seq(tour)
    n = len(cells)
    if any(len(c) != 2 for c in cells):
        raise ValueError("crossings are only defined for 2D tours")
    last = n if _closed(tour) else n - 1
    return [(cells[i], cells[(i + 1) % n]) for i in range(last)]


def orient(a, b, c) -> int:
    v = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    return (v > 0) - (v < 0)


def segments_cross(s, t) -> bool:
    """Open segments s and t share an interior point (not counting shared endpoints)."""
    p1, p2 = s
    p3, p4 = t
    if p1 in (p3, p4) or p2 in (p3, p4):
        return False
    d1 = orient(p3, p4, p1)
    d2 = orient(p3, p4, p2)
    d3 = orient(p1, p2, p3)
    d4 = orient(p1, p2, p4)
    if d1 == d2 == d3 == d4 == 0:
        # collinear: overlap of equal-length leaper segments needs a shared endpoint
        lo = max(min(p1, p2), min(p3, p4))
        hi = min(max(p1, p2), max(p3, p4))
        assert not lo < hi, f"collinear overlap {s} {t}"
        return False
    return d1 * d2 < 0 and d3 * d4 < 0


def crossing_pairs(tour):
    """Yield (i, j), i < j, for every crossing pair of segments (indices into the segment list)."""
    segs = _segments(tour)
    if not segs:
        return
    reach = max(max(abs(a[0] - b[0]), abs(a[1] - b[1])) for a, b in segs)
    buckets = defaultdict(list)
    for i, (a, b) in enumerate(segs):
        buckets[(min(a[0], b[0]), min(a[1], b[1]))].append(i)
    for (r, c), ids in buckets.items():
        for dr in range(-reach, reach + 1):
            for dc in range(-reach, reach + 1):
                other = buckets.get((r + dr, c + dc))
                if not other:
                    continue
                for i in ids:
                    for j in other:
                        if j > i and segments_cross(segs[i], segs[j]):
                            yield i, j


def count_crossings(tour) -> int:
    return sum(1 for _ in crossing_pairs(tour))


def crossing_points(tour):
    """Intersection points of crossing segment pairs, as float (row, col)."""
    segs = _segments(tour)
    out = []
    for i, j in crossing_pairs(tour):
        (a, b), (c, d) = segs[i], segs[j]
        r = (b[0] - a[0], b[1] - a[1])
        s = (d[0] - c[0], d[1] - c[1])
        den = r[0] * s[1] - r[1] * s[0]
        t = ((c[0] - a[0]) * s[1] - (c[1] - a[1]) * s[0]) / den
        out.append((a[0] + t * r[0], a[1] + t * r[1]))
    return out


def count_crossings_bruteforce(tour) -> int:
    """All-pairs count; vectorised over numpy int64 arrays."""
    segs = _segments(tour)
    if len(segs) > 10 ** 4:
        raise ValueError("tour too long for the all-pairs counter")
    a = np.array([s[0] for s in segs], dtype=np.int64)
    b = np.array([s[1] for s in segs], dtype=np.int64)
    total = 0
    n = len(segs)
    for i in range(n - 1):
        p1, p2 = a[i], b[i]
        p3, p4 = a[i + 1:], b[i + 1:]
        shared = (p3 == p1).all(1) | (p3 == p2).all(1) | (p4 == p1).all(1) | (p4 == p2).all(1)
        d1 = np.sign((p4[:, 0] - p3[:, 0]) * (p1[1] - p3[:, 1]) - (p4[:, 1] - p3[:, 1]) * (p1[0] - p3[:, 0]))
        d2 = np.sign((p4[:, 0] - p3[:, 0]) * (p2[1] - p3[:, 1]) - (p4[:, 1] - p3[:, 1]) * (p2[0] - p3[:, 0]))
        d3 = np.sign((p2[0] - p1[0]) * (p3[:, 1] - p1[1]) - (p2[1] - p1[1]) * (p3[:, 0] - p1[0]))
        d4 = np.sign((p2[0] - p1[0]) * (p4[:, 1] - p1[1]) - (p2[1] - p1[1]) * (p4[:, 0] - p1[0]))
        total += int(((d1 * d2 < 0) & (d3 * d4 < 0) & ~shared).sum())
    return total


def metrics(tour, crossings=True) -> MetricsReport:
    two_d = all(len(c) == 2 for c in _seq(tour))
    return MetricsReport(count_turns(tour), count_crossings(tour) if crossings and two_d else None)
