import pytest
from hypothesis import given, settings, strategies as st

from leapertours import BoardDims, UnsupportedDims, build_odd, build_symmetric, validate
from leapertours.oddsym import ODD_EDGE, is_quarter_symmetric, rotate90, rotated_move_set

odd = st.integers(0, 30).map(lambda k: 2 * k + 1)


def test_odd_17x13():
    t = build_odd(BoardDims.wh(17, 13))
    assert len(t) == 17 * 13 - 1
    assert (0, 0) not in t.cells
    assert validate(t, allowed_missing={(0, 0)}).ok
    assert frozenset(ODD_EDGE) in t.move_set()


@settings(max_examples=30, deadline=None)
@given(odd.filter(lambda w: w > 16), odd.filter(lambda h: h > 12))
def test_odd_sweep(w, h):
    t = build_odd(BoardDims.wh(w, h))
    assert validate(t, allowed_missing={(0, 0)}).ok
    assert frozenset(ODD_EDGE) in t.move_set()


def test_odd_rejects():
    for w, h in [(15, 13), (17, 11), (18, 13), (17, 14)]:
        with pytest.raises(UnsupportedDims):
            build_odd(BoardDims.wh(w, h))


def test_rotate90():
    n = 6
    c = (1, 4)
    seq = [c]
    for _ in range(4):
        seq.append(rotate90(seq[-1], n))
    assert seq[4] == c and len(set(seq[:4])) == 4


def test_symmetric_38():
    t = build_symmetric(38)
    assert len(t) == 38 * 38
    assert validate(t).ok
    assert rotated_move_set(t) == t.move_set()
    assert is_quarter_symmetric(t)


@pytest.mark.parametrize("N", [34, 42, 50])
def test_symmetric_sizes(N):
    t = build_symmetric(N)
    assert validate(t).ok and is_quarter_symmetric(t)


def test_symmetric_rejects():
    for N in (36, 30, 33):
        with pytest.raises(UnsupportedDims):
            build_symmetric(N)


def test_plain_tour_not_symmetric():
    from leapertours import build_wh
    assert not is_quarter_symmetric(build_wh(38, 38))


def test_symmetric_rejects_multiple_of_four():
    with pytest.raises(UnsupportedDims):
        build_symmetric(40)


def test_symmetric_turns_consistent():
    from leapertours import count_turns

    n = 19
    quad = count_turns(build_odd(BoardDims((n, n))))
    t = build_symmetric(2 * n)
    turns = count_turns(t)
    # cells come in orbits of four under the quarter turn
    assert turns % 4 == 0
    # each quadrant loses one edge and gains two links; only the centre cell and
    # the two relinked ends can change their turn status
    assert abs(turns - 4 * quad) <= 4 * 3
