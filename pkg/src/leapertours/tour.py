from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Tuple

from .board import KNIGHT, BoardDims, Leaper


@dataclass
class Tour:
    dims: BoardDims
    cells: List[Tuple[int, ...]]
    leaper: Leaper = KNIGHT
    closed: bool = True
    missing: Tuple[Tuple[int, ...], ...] = field(default_factory=tuple)

    def __len__(self):
        return len(self.cells)

    def segments(self):
        n = len(self.cells)
        last = n if self.closed else n - 1
        return [(self.cells[i], self.cells[(i + 1) % n]) for i in range(last)]

    def move_set(self):
        return {frozenset(s) for s in self.segments()}

    def to_dict(self):
        return {
            "dims": list(self.dims.dims),
            "leaper": [self.leaper.a, self.leaper.b],
            "closed": self.closed,
            "cells": [list(c) for c in self.cells],
            "missing": [list(c) for c in self.missing],
        }

    @classmethod
    def from_dict(cls, d):
        return cls(
            dims=BoardDims(d["dims"]),
            cells=[tuple(c) for c in d["cells"]],
            leaper=Leaper(*d.get("leaper", (1, 2))),
            closed=bool(d.get("closed", True)),
            missing=tuple(tuple(c) for c in d.get("missing", [])),
        )


def transpose_cells(cells):
    return [(c[1], c[0]) + tuple(c[2:]) for c in cells]
