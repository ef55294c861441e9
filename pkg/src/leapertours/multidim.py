"""Closed knight's tours on boards with three or more dimensions.

Two axes carry the 2D construction; every other axis indexes layers, visited
in boustrophedon order. Only the first layer keeps the bottom-left junction
and only the last keeps the top-right one. Elsewhere the junction regions are
swept by formation moves, and the quartet hops to the next layer with a
translation of two cells in the plane and one along a layer axis. Odd layers
are rotated by 180 degrees so each layer starts where the previous one ended.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Tuple

from . import gadgets as G
from .board import KNIGHT, BoardDims, UnsupportedDims
from .formation import DOUBLE, SLOT_MAP, SLOTS
from .tour import Tour
from .tour2d import (
    NotSingleCycle, TourPlan, _plan_wh, _rot_block, _rot_cell, cycle_order, materialize_order,
)


@dataclass
class Layer:
    coords: Tuple[int, ...]  # position along the layer axes
    flipped: bool
    opening: str  # "junction" or "sweep"
    closing: str  # "junction" or "sweep"
    plan: TourPlan


@dataclass
class LayerPlan:
    dims: BoardDims
    h_axis: int
    w_axis: int
    layer_axes: Tuple[int, ...]
    layers: List[Layer] = field(default_factory=list)
    bl_name: str = "BL5H"
    fallback: bool = False

    @property
    def junction_heights(self):
        return (self.layers[0].plan.bl.height, self.layers[-1].plan.tr.height)


def snake(sizes):
    """Boustrophedon order over a box: consecutive tuples differ by 1 in one place."""
    if not sizes:
        yield ()
        return
    head, rest = sizes[0], sizes[1:]
    inner = list(snake(rest))
    for i in range(head):
        seq = inner if i % 2 == 0 else inner[::-1]
        for t in seq:
            yield (i,) + t


def _axis_choices(dims):
    n = len(dims)
    for wa in range(n):
        if dims[wa] % 2 or dims[wa] < 16:
            continue
        for ha in range(n):
            if ha != wa and dims[ha] >= 12:
                yield wa, ha


def _layer_blocks(layer: Layer):
    """Quartet blocks of one layer in board coordinates of that layer."""
    p = layer.plan
    w, h = p.w, p.h
    blocks = []
    if layer.opening == "sweep":
        pos = G.LAYER_START_BLOCK
        blocks.append(pos)
        for mv in G.LAYER_START:
            pos = (pos[0] + mv[0], pos[1] + mv[1])
            blocks.append(pos)
        assert pos == p.bl.iface
    else:
        blocks.append(p.bl.iface)
    pos = p.bl.iface
    for mv in p.formation_moves:
        pos = (pos[0] + mv[0], pos[1] + mv[1])
        blocks.append(pos)
    assert pos == p.tr.iface
    if layer.closing == "sweep":
        pos = G.JUNCTIONS[p.tr.name]["iface"]
        for mv in G.LAYER_END[p.tr.name]:
            pos = (pos[0] + mv[0], pos[1] + mv[1])
            blocks.append(_rot_block(pos, w, h))
        assert pos == G.LAYER_END_BLOCK
    if layer.flipped:
        blocks = [_rot_block(b, w, h) for b in blocks]
    return blocks


def _run(blocks):
    """Formation walk over blocks (R, C, layer coords). Returns the four knight paths."""
    def cells(b):
        return [(b[0] + a, b[1] + c) + b[2] for a, c in SLOTS]

    slot = [0, 1, 2, 3]
    paths = [[c] for c in cells(blocks[0])]
    for prev, cur in zip(blocks, blocks[1:]):
        v = (cur[0] - prev[0], cur[1] - prev[1])
        if cur[2] != prev[2]:
            step = [abs(x - y) for x, y in zip(cur[2], prev[2])]
            assert v in DOUBLE and sorted(step)[-1] == 1 and sum(step) == 1, (prev, cur)
            sm = (0, 1, 2, 3)
        else:
            sm = SLOT_MAP[v]
        new = cells(cur)
        for k in range(4):
            slot[k] = sm[slot[k]]
            c = new[slot[k]]
            if c != paths[k][-1]:
                paths[k].append(c)
    return paths


def plan_multidim(dims, bl_name="BL5H") -> LayerPlan:
    dims = dims if isinstance(dims, BoardDims) else BoardDims(dims)
    if dims.ndim < 3:
        raise UnsupportedDims("use the 2D builder for two dimensions")
    d = dims.dims
    err = None
    for wa, ha in _axis_choices(d):
        la = tuple(i for i in range(len(d)) if i not in (wa, ha))
        try:
            return _plan_axes(dims, wa, ha, la, bl_name)
        except UnsupportedDims as e:
            err = e
    raise UnsupportedDims(str(err) if err else f"need an even side >= 16 and another side >= 12, got {d}")


def _plan_axes(dims, wa, ha, la, bl_name):
    d = dims.dims
    w, h = d[wa], d[ha]
    coords = list(snake([d[i] for i in la]))
    last_plan = _plan_wh(BoardDims.wh(w, h), w, h, False, bl_name)
    if len(coords) > 1 and last_plan.tr.name not in G.LAYER_END:
        # the narrow top-right junctions leave no room for a layer exit
        raise UnsupportedDims(f"no layer exit for junction {last_plan.tr.name}")
    open_plan = _plan_wh(BoardDims.wh(w, h), w, h, False, "BL5H")
    layers = []
    for k, c in enumerate(coords):
        first, last = k == 0, k == len(coords) - 1
        p = last_plan if (first or last) else open_plan
        layers.append(Layer(c, k % 2 == 1, "junction" if first else "sweep",
                            "junction" if last else "sweep", p))
    return LayerPlan(dims, ha, wa, la, layers, bl_name, bl_name != "BL5H")


def _pieces(lp: LayerPlan):
    blocks = []
    for layer in lp.layers:
        blocks.extend(b + (layer.coords,) for b in _layer_blocks(layer))
    kpaths = _run(blocks)
    first, last = lp.layers[0], lp.layers[-1]
    juncs = [[c + first.coords for c in path] for path in first.plan.bl.paths]
    p = last.plan
    for path in p.tr.paths:
        if last.flipped:
            path = [_rot_cell(c, p.w, p.h) for c in path]
        juncs.append([c + last.coords for c in path])
    start = (0, 0) + first.coords
    return kpaths, juncs, cycle_order(kpaths, juncs, start)


def _to_axes(cells, lp: LayerPlan):
    n = lp.dims.ndim
    out = []
    for c in cells:
        v = [0] * n
        v[lp.h_axis] = c[0]
        v[lp.w_axis] = c[1]
        for ax, x in zip(lp.layer_axes, c[2:]):
            v[ax] = x
        out.append(tuple(v))
    return out


def build_multidim_plan(dims) -> Tuple[LayerPlan, Tour]:
    lp = plan_multidim(dims)
    try:
        pieces = _pieces(lp)
    except NotSingleCycle:
        # the layered sequence can permute the quartet differently from the flat
        # case; a bottom-left junction with the other matching closes the cycle
        lp = plan_multidim(dims, bl_name="TR5V")
        pieces = _pieces(lp)
    cells = _to_axes(materialize_order(*pieces), lp)
    return lp, Tour(lp.dims, cells, KNIGHT, True)


def build_multidim(dims) -> Tour:
    return build_multidim_plan(dims)[1]
