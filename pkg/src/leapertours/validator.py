"""Checks that a cell sequence is a genuine leaper tour."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .board import is_leaper_move


@dataclass
class Verdict:
    ok: bool
    kind: str = "ok"  # ok / dimension / out_of_bounds / duplicate / missing / illegal_move / not_closed
    index: Optional[int] = None
    detail: str = ""

    def __bool__(self):
        return self.ok

    def to_dict(self):
        return {"ok": self.ok, "kind": self.kind, "index": self.index, "detail": self.detail}


def _flat(cell, dims):
    k = 0
    for x, d in zip(cell, dims):
        k = k * d + x
    return k


def validate(tour, allowed_missing=()) -> Verdict:
    dims = tour.dims.dims
    cells = tour.cells
    seen = bytearray(tour.dims.size)
    for i, c in enumerate(cells):
        if len(c) != len(dims):
            return Verdict(False, "dimension", i, f"cell {c} has wrong dimension count")
        if not all(0 <= x < d for x, d in zip(c, dims)):
            return Verdict(False, "out_of_bounds", i, f"cell {c} outside board")
        k = _flat(c, dims)
        if seen[k]:
            return Verdict(False, "duplicate", i, f"cell {c} visited twice")
        seen[k] = 1
    allowed = {tuple(c) for c in allowed_missing}
    for c in allowed:
        if tour.dims.contains(c) and seen[_flat(c, dims)]:
            return Verdict(False, "duplicate", None, f"cell {c} marked missing but visited")
    if len(cells) + len(allowed) != tour.dims.size:
        # find one uncovered cell for the report
        for c in tour.dims.cells():
            if c not in allowed and not seen[_flat(c, dims)]:
                return Verdict(False, "missing", None, f"cell {c} never visited")
        return Verdict(False, "missing", None, "cell count mismatch")
    lp = tour.leaper
    for i in range(len(cells) - 1):
        if not is_leaper_move(cells[i], cells[i + 1], lp):
            return Verdict(False, "illegal_move", i, f"{cells[i]} -> {cells[i + 1]}")
    wraps = len(cells) > 2 and is_leaper_move(cells[-1], cells[0], lp)
    if tour.closed and not wraps:
        return Verdict(False, "not_closed", len(cells) - 1, f"{cells[-1]} -> {cells[0]}")
    return Verdict(True)
