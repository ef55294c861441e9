"""Lower bound on crossings along a board edge.

Cells of the left-most column are grouped into triplets of consecutive rows.
Each edge cell has four moves, of which a tour uses two, so a triplet has
6**3 configurations. A graph with one node per configuration carries the
crossings inside a triplet on its nodes and the crossings between a triplet
and the one directly below it on its edges. The minimum mean cycle of that
graph is the least number of crossings per triplet any tour can achieve.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import List, Sequence, Tuple

import numpy as np

from .board import KNIGHT, Leaper
from .metrics import segments_cross

INF = np.iinfo(np.int64).max // 4


def edge_directions(leaper: Leaper = KNIGHT):
    """Moves available to a left-edge cell, clockwise starting from the top."""
    a, b = sorted((leaper.a, leaper.b))
    dirs = [(b, a), (a, b), (-a, b), (-b, a)]
    return [d for i, d in enumerate(dirs) if d not in dirs[:i]]


@dataclass(frozen=True)
class TripletConfig:
    # for each of the three cells (rows 0, 1, 2), the indices of its two moves
    choices: Tuple[Tuple[int, int], Tuple[int, int], Tuple[int, int]]

    def segments(self, leaper=KNIGHT, row0=0):
        dirs = edge_directions(leaper)
        out = []
        for k, pair in enumerate(self.choices):
            src = (row0 + k, 0)
            for i in pair:
                dr, dc = dirs[i]
                out.append((src, (src[0] + dr, src[1] + dc)))
        return out

    def label(self):
        return " ".join("D%dD%d" % (i + 1, j + 1) for i, j in self.choices)


def _count(segs_a, segs_b=None):
    if segs_b is None:
        return sum(segments_cross(s, t) for s, t in combinations(segs_a, 2))
    return sum(segments_cross(s, t) for s in segs_a for t in segs_b)


@dataclass
class ConfigGraph:
    configs: List[TripletConfig]
    node_weight: np.ndarray  # (n,)
    edge_weight: np.ndarray  # (n, n); [v, u] counts crossings with v directly above u
    leaper: Leaper = KNIGHT

    @property
    def n(self):
        return len(self.configs)


def all_configs(leaper: Leaper = KNIGHT):
    pairs = list(combinations(range(len(edge_directions(leaper))), 2))
    return [TripletConfig(c) for c in product(pairs, repeat=3)]


def build_config_graph(leaper: Leaper = KNIGHT) -> ConfigGraph:
    configs = all_configs(leaper)
    low = [c.segments(leaper, 0) for c in configs]
    high = [c.segments(leaper, 3) for c in configs]
    node = np.array([_count(s) for s in low], dtype=np.int64)
    n = len(configs)
    edge = np.zeros((n, n), dtype=np.int64)
    for v in range(n):
        for u in range(n):
            edge[v, u] = _count(high[v], low[u])
    return ConfigGraph(configs, node, edge, leaper)


@dataclass
class SplitGraph:
    """Edge-weighted graph; node v of the source graph becomes 2v (in) and 2v+1 (out)."""
    weight: np.ndarray  # (2n, 2n), INF where there is no edge
    steps_per_node: int = 2

    @property
    def n(self):
        return self.weight.shape[0]

    def edge_count(self):
        return int((self.weight < INF).sum())


def split_node_weights(g) -> SplitGraph:
    """Moves node weights onto in->out edges. Accepts a ConfigGraph or (node, edge) arrays."""
    if isinstance(g, ConfigGraph):
        node, edge = g.node_weight, g.edge_weight
    else:
        node, edge = g
    node = np.asarray(node, dtype=np.int64)
    edge = np.asarray(edge, dtype=np.int64)
    n = len(node)
    w = np.full((2 * n, 2 * n), INF, dtype=np.int64)
    idx = np.arange(n)
    w[2 * idx, 2 * idx + 1] = node
    w[np.ix_(2 * idx + 1, 2 * idx)] = np.where(edge < INF, edge, INF)
    return SplitGraph(w)


class NoCycle(ValueError):
    pass


def _as_matrix(g):
    if isinstance(g, SplitGraph):
        return g.weight, g.steps_per_node
    return np.asarray(g, dtype=np.int64), 1


def min_mean_cycle(g) -> Tuple[Fraction, List[int]]:
    """Karp's minimum mean cycle.

    `g` is a SplitGraph or a square int matrix with INF marking absent edges.
    For a SplitGraph the mean is per source-graph node, i.e. per in->out edge.
    Returns (mean, cycle as a list of vertices, first vertex not repeated).
    """
    w, scale = _as_matrix(g)
    n = w.shape[0]
    # D[k, v]: least weight of a walk with exactly k edges ending at v, from any start
    D = np.full((n + 1, n), INF, dtype=np.int64)
    P = np.full((n + 1, n), -1, dtype=np.int64)
    D[0] = 0
    for k in range(1, n + 1):
        cand = D[k - 1][:, None] + w  # cand[u, v]
        cand[(D[k - 1] >= INF)[:, None] | (w >= INF)] = INF
        P[k] = cand.argmin(axis=0)
        D[k] = cand[P[k], np.arange(n)]
    best = None
    best_v = -1
    for v in range(n):
        if D[n, v] >= INF:
            continue
        worst = None
        for k in range(n):
            if D[k, v] >= INF:
                continue
            val = Fraction(int(D[n, v] - D[k, v]), n - k)
            if worst is None or val > worst:
                worst = val
        if worst is not None and (best is None or worst < best):
            best, best_v = worst, v
    if best is None:
        raise NoCycle("graph has no cycle")
    # walk back n steps from best_v; the walk repeats a vertex, pick the best cycle on it
    walk = [best_v]
    v = best_v
    for k in range(n, 0, -1):
        v = int(P[k, v])
        walk.append(v)
    walk.reverse()
    cycle = None
    cmean = None
    seen = {}
    for i, x in enumerate(walk):
        if x in seen:
            cyc = walk[seen[x]:i]
            m = _cycle_mean(w, cyc)
            if cmean is None or m < cmean:
                cycle, cmean = cyc, m
        seen[x] = i
    assert cmean == best, (cmean, best)
    return best * scale, cycle


def _cycle_mean(w, cyc):
    tot = sum(int(w[cyc[i], cyc[(i + 1) % len(cyc)]]) for i in range(len(cyc)))
    return Fraction(tot, len(cyc))


def min_mean_cycle_bruteforce(w) -> Fraction:
    """Minimum mean over all simple cycles, by enumeration. For small graphs only."""
    w, scale = _as_matrix(w)
    n = w.shape[0]
    if n > 12:
        raise ValueError("too many vertices for enumeration")
    best = None

    def dfs(start, v, total, length, used):
        nonlocal best
        for u in range(start, n):
            if w[v, u] >= INF:
                continue
            if u == start:
                m = Fraction(total + int(w[v, u]), length + 1)
                if best is None or m < best:
                    best = m
            elif not used[u]:
                used[u] = True
                dfs(start, u, total + int(w[v, u]), length + 1, used)
                used[u] = False

    for s in range(n):
        used = [False] * n
        used[s] = True
        dfs(s, s, 0, 0, used)
    if best is None:
        raise NoCycle("graph has no cycle")
    return best * scale


@dataclass
class BoundReport:
    nodes: int
    split_nodes: int
    mean: Fraction
    witness: List[TripletConfig]
    leaper: Leaper

    def per_side(self, n):
        """Crossings forced along one edge of length n, ignoring the O(1) leftover."""
        return (n // 3) * self.mean

    def to_dict(self):
        return {
            "nodes": self.nodes,
            "split_nodes": self.split_nodes,
            "mean_per_triplet": str(self.mean),
            "witness": [c.label() for c in self.witness],
            "per_cell": str(self.mean / 3),
            "bound": "crossings >= 4*(n/3)*%s - O(1) = %sn - O(1)" % (self.mean, self.mean * 4 / 3),
        }


def crossing_bound_report(leaper: Leaper = KNIGHT) -> BoundReport:
    g = build_config_graph(leaper)
    sg = split_node_weights(g)
    mean, cyc = min_mean_cycle(sg)
    witness = [g.configs[v // 2] for v in cyc if v % 2 == 0]
    return BoundReport(g.n, sg.n, mean, witness, leaper)
