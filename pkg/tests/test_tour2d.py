import random

import pytest
from hypothesis import given, settings, strategies as st

from leapertours import BoardDims, UnsupportedDims, build, build_wh, cell_at, index_of, metrics, plan, validate
from leapertours.tour2d import bottom_right_id, junction_height, top_left_id

even_w = st.integers(8, 36).map(lambda k: 2 * k)
any_h = st.integers(12, 72)


def test_smallest_boards():
    for w, h in [(16, 12), (16, 13), (18, 12), (16, 16)]:
        t = build_wh(w, h)
        assert len(t) == w * h
        assert validate(t).ok, (w, h)


def test_rejects_small_or_odd():
    for w, h in [(14, 12), (16, 11), (15, 13), (12, 16)]:
        with pytest.raises(UnsupportedDims):
            build_wh(w, h)
    with pytest.raises(UnsupportedDims):
        build(BoardDims((12, 16, 3)))


def test_odd_width_is_transposed():
    p = plan(BoardDims.wh(13, 16))
    assert p.transposed and (p.w, p.h) == (16, 13)
    t = build_wh(13, 16)
    assert validate(t).ok and t.dims.dims == (16, 13)


@settings(max_examples=40, deadline=None)
@given(even_w, any_h)
def test_valid(w, h):
    assert validate(build_wh(w, h)).ok


@settings(max_examples=60, deadline=None)
@given(even_w, any_h)
def test_junction_algebra(w, h):
    # between the junctions the quartet either keeps its matching or does one vertical move
    p = plan(BoardDims.wh(w, h))
    eff = p.inter_junction_effect()
    assert eff.word in ("D", "V")
    # the two junctions plus the moves in between must not close into separate loops
    assert eff(p.bl.matching()) != p.tr.matching()


def test_corner_ids_cycle():
    for w in range(16, 80, 2):
        assert bottom_right_id(w) == bottom_right_id(w + 8)
    for h in range(12, 80):
        assert top_left_id(h) == top_left_id(h + 4)
    assert {junction_height(w, h) for w in range(16, 60, 2) for h in range(12, 60)} <= set(range(5, 9))


def test_starts_at_origin():
    t = build_wh(20, 15)
    assert t.cells[0] == (0, 0)


@pytest.mark.parametrize("wh", [(30, 30), (48, 40), (16, 12), (17, 16)])
def test_indexing_matches_tour(wh):
    p = plan(BoardDims.wh(*wh))
    t = build_wh(*wh)
    for i, c in enumerate(t.cells):
        assert cell_at(p, i) == c
        assert index_of(p, c) == i


@settings(max_examples=30, deadline=None)
@given(st.integers(8, 200).map(lambda k: 2 * k), st.integers(12, 400), st.integers(0, 10 ** 9))
def test_index_roundtrip_large(w, h, seed):
    p = plan(BoardDims.wh(w, h))
    rng = random.Random(seed)
    for _ in range(20):
        i = rng.randrange(w * h)
        c = cell_at(p, i)
        assert p.dims.contains(c)
        assert index_of(p, c) == i


def test_index_consecutive_are_moves():
    p = plan(BoardDims.wh(300, 300))
    rng = random.Random(7)
    from leapertours import is_leaper_move
    for _ in range(200):
        i = rng.randrange(300 * 300)
        assert is_leaper_move(cell_at(p, i), cell_at(p, (i + 1) % (300 * 300)))


def test_index_out_of_board():
    p = plan(BoardDims.wh(16, 12))
    with pytest.raises(IndexError):
        index_of(p, (12, 0))


@pytest.mark.parametrize("h", [40, 41, 57])
def test_width_step(h):
    # eight more columns add a fixed number of turns and crossings
    for w in (40, 42, 44, 46):
        a, b = metrics(build_wh(w, h)), metrics(build_wh(w + 8, h))
        assert b.turns - a.turns == 44
        assert b.crossings - a.crossings == 64


def test_plan_30x30():
    p = plan(BoardDims.wh(30, 30))
    assert p.junction_height == 5 and p.tr.height == 5
    assert p.corner_ids["bottom_right"] == 1


def test_junction_contracts():
    from leapertours import is_leaper_move
    from leapertours.formation import block_cells
    from leapertours.matching import Matching

    for w, h in [(16, 12), (30, 30), (18, 13), (40, 41), (16, 15)]:
        p = plan(BoardDims.wh(w, h))
        assert p.bl.matching() == Matching.HORIZONTAL
        assert p.tr.matching() == Matching.VERTICAL
        for j in (p.bl, p.tr):
            a, b = j.paths
            assert not set(a) & set(b)
            ends = {a[0], a[-1], b[0], b[-1]}
            assert ends == set(block_cells(j.iface))
            for path in (a, b):
                assert len(set(path)) == len(path)
                assert all(is_leaper_move(x, y) for x, y in zip(path, path[1:]))


def test_corner_effects():
    from leapertours import gadgets as G
    from leapertours.formation import kind
    from leapertours.matching import compose

    assert compose("".join(kind(m) for m in G.HEEL)).word == "D"
    # corner offsets d = 0, 2 act as a vertical move, d = 4, 6 are neutral
    got = {d: compose("".join(kind(m) for part in parts for m in part[2])).word for d, parts in G.CORNERS.items()}
    assert got == {0: "V", 2: "V", 4: "D", 6: "D"}


@pytest.mark.parametrize("wh", [(16, 12), (30, 30), (22, 19)])
def test_footprints_partition(wh):
    from leapertours.tour2d import _pieces

    p = plan(BoardDims.wh(*wh))
    kpaths, juncs, _ = _pieces(p)
    cells = [c for k in kpaths for c in k[1:-1]] + [c for j in juncs for c in j]
    assert len(cells) == len(set(cells)) == wh[0] * wh[1]


def test_start_rule():
    from leapertours.tour2d import _pieces

    p = plan(BoardDims.wh(24, 20))
    t = build_wh(24, 20)
    assert t.cells[0] == (0, 0) == cell_at(p, 0)
    _, juncs, _ = _pieces(p)
    path = next(j for j in juncs[:2] if (0, 0) in j)
    i = path.index((0, 0))
    nbrs = [path[k] for k in (i - 1, i + 1) if 0 <= k < len(path)]
    assert t.cells[1] == min(nbrs)


def test_last_index_closes():
    from leapertours import is_leaper_move

    p = plan(BoardDims.wh(24, 20))
    assert is_leaper_move(cell_at(p, 24 * 20 - 1), cell_at(p, 0))
    with pytest.raises(IndexError):
        cell_at(p, 24 * 20)


@pytest.mark.parametrize("w", [40, 48])
def test_height_step(w):
    # four more rows add 16 turns and 20 crossings
    for h in (40, 41, 42, 43):
        a, b = metrics(build_wh(w, h)), metrics(build_wh(w, h + 4))
        assert (b.turns - a.turns, b.crossings - a.crossings) == (16, 20)
