"""Backtracking tour search for tiny boards, used as ground truth."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .board import KNIGHT, BoardDims, Leaper, neighbors
from .metrics import segments_cross
from .tour import Tour


class TooLarge(ValueError):
    pass


@dataclass
class OracleConfig:
    max_cells_exist: int = 36
    max_cells_optimize: int = 30


@dataclass
class SearchResult:
    tour: Optional[Tour]
    optimal: bool  # search space exhausted
    value: Optional[int] = None
    nodes: int = 0


class _Graph:
    def __init__(self, dims, leaper, missing):
        self.dims = dims
        self.cells = [c for c in dims.cells() if c not in missing]
        idx = {c: i for i, c in enumerate(self.cells)}
        self.adj = [
            sorted(idx[x] for x in neighbors(c, dims, leaper) if x in idx)
            for c in self.cells
        ]
        self.n = len(self.cells)


def _search(g: _Graph, on_cycle, budget=None, bound=None):
    """Enumerate Hamiltonian cycles through vertex 0.

    on_cycle(path) is called for each cycle and returns True to stop.
    bound(path) may return True to prune a partial path.
    Returns (stopped, exhausted, nodes).
    """
    n = g.n
    adj = g.adj
    if n < 3 or any(len(a) < 2 for a in adj):
        return False, True, 0
    visited = [False] * n
    # avail[x]: unvisited neighbours of x, plus one for the head, plus one for the start
    avail = [len(a) for a in adj]
    start = 0
    path = [start]
    visited[start] = True
    nodes = 0
    state = {"stop": False, "cut": False}

    def ok_around(v):
        # v just stopped being the head; its unvisited neighbours lost one option
        for x in adj[v]:
            if not visited[x] and avail[x] < 2:
                return False
        return True

    def rec():
        nonlocal nodes
        if state["stop"] or state["cut"]:
            return
        head = path[-1]
        if len(path) == n:
            if start in adj[head] and on_cycle(path):
                state["stop"] = True
            return
        cand = [x for x in adj[head] if not visited[x]]
        cand.sort(key=lambda x: (avail[x], x))
        for x in cand:
            if budget is not None and nodes >= budget:
                state["cut"] = True
                return
            nodes += 1
            visited[x] = True
            path.append(x)
            # neighbours of x lose x as unvisited but gain it as head; only the
            # old head stops counting for its neighbours
            if head != start:
                for y in adj[head]:
                    avail[y] -= 1
            good = (head == start or ok_around(head)) and not (bound and bound(path))
            if good:
                rec()
            if head != start:
                for y in adj[head]:
                    avail[y] += 1
            path.pop()
            visited[x] = False
            if state["stop"] or state["cut"]:
                return

    if budget is not None and budget <= 0:
        return False, False, 0
    rec()
    return state["stop"], not state["cut"] and not state["stop"], nodes


def _check_size(dims, missing, cap):
    if dims.size - len(missing) > cap:
        raise TooLarge(f"{dims.size - len(missing)} cells exceeds the oracle cap of {cap}")


def find_closed_tour(dims, leaper: Leaper = KNIGHT, allowed_missing=(), cfg=OracleConfig()):
    dims = dims if isinstance(dims, BoardDims) else BoardDims(dims)
    missing = {tuple(c) for c in allowed_missing}
    _check_size(dims, missing, cfg.max_cells_exist)
    g = _Graph(dims, leaper, missing)
    found = []

    def take(path):
        found.append([g.cells[i] for i in path])
        return True

    _search(g, take)
    if not found:
        return None
    return Tour(dims, found[0], leaper, True, tuple(sorted(missing)))


def _turn(a, b, c):
    u = (b[0] - a[0], b[1] - a[1])
    v = (c[0] - b[0], c[1] - b[1])
    return u[0] * v[1] - u[1] * v[0] != 0


def min_metric_tour(dims, metric="TURNS", budget=None, leaper: Leaper = KNIGHT, cfg=OracleConfig()):
    """Branch and bound for the tour minimising turns or crossings.

    `budget` limits the number of search nodes; the result says whether the
    search space was exhausted, in which case the value is optimal.
    """
    dims = dims if isinstance(dims, BoardDims) else BoardDims(dims)
    _check_size(dims, (), cfg.max_cells_optimize)
    metric = metric.upper()
    if metric not in ("TURNS", "CROSSINGS"):
        raise ValueError(f"unknown metric {metric}")
    g = _Graph(dims, leaper, set())
    C = g.cells
    best = {"value": None, "path": None}
    # every edge cell forces a turn: the straight continuation leaves the board
    forced = [
        all(not dims.contains((2 * C[x][0] - C[y][0], 2 * C[x][1] - C[y][1])) for y in g.adj[x])
        for x in range(g.n)
    ]

    def partial_crossings(path):
        segs = [(C[path[i]], C[path[i + 1]]) for i in range(len(path) - 1)]
        new = segs[-1]
        return sum(segments_cross(new, s) for s in segs[:-1])

    # incremental cost kept in a stack aligned with path length
    cost = [0]

    def bound(path):
        del cost[len(path) - 1:]
        if metric == "TURNS":
            add = _turn(C[path[-3]], C[path[-2]], C[path[-1]]) if len(path) >= 3 else 0
        else:
            add = partial_crossings(path)
        cost.append(cost[-1] + add)
        if best["value"] is None:
            return False
        lb = cost[-1]
        if metric == "TURNS":
            on = set(path[1:-1])
            lb += sum(1 for x in range(g.n) if forced[x] and x not in on)
        return lb >= best["value"]

    def full_value(path):
        cells = [C[i] for i in path]
        t = Tour(dims, cells, leaper, True)
        if metric == "TURNS":
            from .metrics import count_turns
            return count_turns(t)
        from .metrics import count_crossings
        return count_crossings(t)

    def take(path):
        v = full_value(path)
        if best["value"] is None or v < best["value"]:
            best["value"] = v
            best["path"] = list(path)
        return False

    _, exhausted, nodes = _search(g, take, budget=budget, bound=bound)
    if best["path"] is None:
        return SearchResult(None, exhausted, None, nodes)
    tour = Tour(dims, [C[i] for i in best["path"]], leaper, True)
    return SearchResult(tour, exhausted, best["value"], nodes)
