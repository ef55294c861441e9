"""Cells, boards, leapers and leaper moves."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from math import gcd, prod
from typing import Iterable, Tuple

Cell = Tuple[int, ...]


class UnsupportedDims(ValueError):
    """Raised when a builder cannot handle the requested board shape."""


@dataclass(frozen=True)
class Leaper:
    a: int
    b: int

    def __post_init__(self):
        if not (0 < self.a < self.b):
            raise ValueError(f"leaper needs 0 < a < b, got ({self.a},{self.b})")

    @property
    def tourable(self) -> bool:
        # closed tours need gcd 1 and an odd move length sum
        return gcd(self.a, self.b) == 1 and (self.a + self.b) % 2 == 1

    def deltas(self, dim: int = 2):
        """All move vectors in `dim` dimensions."""
        out = []
        for i, j in permutations(range(dim), 2):
            for sa in (1, -1):
                for sb in (1, -1):
                    v = [0] * dim
                    v[i] = sa * self.a
                    v[j] = sb * self.b
                    out.append(tuple(v))
        return out


KNIGHT = Leaper(1, 2)
GIRAFFE = Leaper(1, 4)


@dataclass(frozen=True)
class BoardDims:
    dims: Tuple[int, ...]

    def __init__(self, dims: Iterable[int]):
        dims = tuple(int(d) for d in dims)
        if len(dims) < 2 or any(d < 1 for d in dims):
            raise ValueError(f"bad board dims {dims}")
        object.__setattr__(self, "dims", dims)

    @classmethod
    def wh(cls, w: int, h: int) -> "BoardDims":
        return cls((h, w))

    @property
    def ndim(self) -> int:
        return len(self.dims)

    @property
    def h(self) -> int:
        return self.dims[0]

    @property
    def w(self) -> int:
        return self.dims[1]

    @property
    def size(self) -> int:
        return prod(self.dims)

    def contains(self, cell) -> bool:
        return len(cell) == len(self.dims) and all(0 <= x < d for x, d in zip(cell, self.dims))

    def cells(self):
        def rec(prefix, k):
            if k == len(self.dims):
                yield tuple(prefix)
                return
            for x in range(self.dims[k]):
                yield from rec(prefix + [x], k + 1)
        return rec([], 0)


@dataclass(frozen=True)
class Move:
    src: Cell
    dst: Cell


def is_leaper_move(src, dst, leaper: Leaper = KNIGHT) -> bool:
    if len(src) != len(dst):
        raise ValueError("cells have different dimension counts")
    nz = sorted(abs(x - y) for x, y in zip(src, dst) if x != y)
    return nz == [leaper.a, leaper.b]


def neighbors(cell, dims: BoardDims, leaper: Leaper = KNIGHT) -> set:
    out = set()
    for d in leaper.deltas(len(cell)):
        nxt = tuple(x + y for x, y in zip(cell, d))
        if dims.contains(nxt):
            out.add(nxt)
    return out
