import random

import pytest
from hypothesis import given, settings, strategies as st

from leapertours.board import BoardDims, is_leaper_move
from leapertours.metrics import (
    count_crossings, count_crossings_bruteforce, count_turns, crossing_points, metrics, segments_cross,
)
from leapertours.tour import Tour
from leapertours.tour2d import build_wh, heel_metrics
from walks import perturb, random_walk


def test_turns_small():
    # straight run of three equal moves, open: no turns
    assert count_turns(Tour(BoardDims((10, 10)), [(0, 0), (1, 2), (2, 4), (3, 6)], closed=False)) == 0
    # a closed 4-cycle turns at every cell
    sq = [(0, 0), (1, 2), (3, 1), (2, -1)]
    assert count_turns(sq) == 4


def test_turns_three_dims():
    # collinear in 3D needs all minors zero
    assert count_turns(Tour(BoardDims((5, 5, 5)), [(0, 0, 0), (0, 1, 2), (0, 2, 4)], closed=False)) == 0
    assert count_turns(Tour(BoardDims((5, 5, 5)), [(0, 0, 0), (0, 1, 2), (1, 1, 4)], closed=False)) == 1


def test_segments_cross():
    assert segments_cross(((0, 0), (1, 2)), ((0, 2), (1, 0)))
    # touching at an endpoint is not a crossing
    assert not segments_cross(((0, 0), (1, 2)), ((1, 2), (2, 0)))
    # parallel
    assert not segments_cross(((0, 0), (1, 2)), ((1, 0), (2, 2)))
    # collinear, sharing an endpoint
    assert not segments_cross(((0, 0), (1, 2)), ((1, 2), (2, 4)))


def test_crossing_point():
    t = Tour(BoardDims((3, 3)), [(0, 0), (1, 2), (0, 2), (1, 0)], closed=False)
    assert count_crossings(t) == 1
    assert crossing_points(t) == [(0.5, 1.0)]


def test_metrics_16x12():
    t = build_wh(16, 12)
    m = metrics(t)
    assert m.crossings == count_crossings_bruteforce(t) == len(crossing_points(t))
    assert m.turns == count_turns(list(reversed(t.cells)))


def test_metrics_regression_30x30():
    # values from the current construction, kept as a regression check
    m = metrics(build_wh(30, 30))
    assert (m.turns, m.crossings) == (261, 368)


def test_heel_constants():
    assert heel_metrics() == (22, 32)
    # longer diagonal stubs add nothing: the heel's crossings are all local
    assert heel_metrics(12) == (22, 32)


def test_crossings_only_2d():
    with pytest.raises(ValueError):
        count_crossings(Tour(BoardDims((3, 3, 3)), [(0, 0, 0), (0, 1, 2)], closed=False))
    assert metrics(Tour(BoardDims((3, 3, 3)), [(0, 0, 0), (0, 1, 2), (0, 2, 0)])).crossings is None


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 6), st.integers(5, 20), st.integers(5, 20), st.integers(2, 150))
def test_fast_counter_matches_bruteforce(seed, w, h, n):
    path = random_walk(random.Random(seed), w, h, n)
    # close the walk only when the wrap-around step is a knight move
    for closed in (False, is_leaper_move(path[-1], path[0])):
        t = Tour(BoardDims.wh(w, h), path, closed=closed)
        assert count_crossings(t) == count_crossings_bruteforce(t)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_perturbed_tours(seed):
    rng = random.Random(seed)
    cells = perturb(rng, build_wh(16, 12).cells, steps=10)
    t = Tour(BoardDims.wh(16, 12), cells, closed=False)
    assert count_crossings(t) == count_crossings_bruteforce(t)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_invariant_under_symmetries(seed):
    w, h = 12, 9
    path = random_walk(random.Random(seed), w, h, 60)
    t = Tour(BoardDims.wh(w, h), path, closed=False)
    base = (count_turns(t), count_crossings(t))
    for cells in (path[::-1], [(h - 1 - r, c) for r, c in path], [(c, r) for r, c in path]):
        t2 = Tour(BoardDims.wh(max(w, h), max(w, h)), cells, closed=False)
        assert (count_turns(t2), count_crossings(t2)) == base


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_closed_tour_rotation(seed):
    t = build_wh(20, 14)
    base = (count_turns(t), count_crossings(t))
    k = random.Random(seed).randrange(len(t))
    t2 = Tour(t.dims, t.cells[k:] + t.cells[:k])
    assert (count_turns(t2), count_crossings(t2)) == base
