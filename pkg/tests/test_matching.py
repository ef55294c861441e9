from collections import Counter

from hypothesis import given, strategies as st

from leapertours.formation import DIAGONAL, DOUBLE, SLOT_MAP, STRAIGHT, kind, moves_slot_perm
from leapertours.matching import (
    ELEMENTS, IDENTITY, WORDS, GroupElement, Matching, apply, cayley_table, compose, effect_of_slot_perm,
)

H, V, X = Matching.HORIZONTAL, Matching.VERTICAL, Matching.CROSS

# what each move (or composite) does to each matching, written out by hand, independent of the code
APPLY_TABLE = {
    "D": {V: V, H: H, X: X},
    "V": {V: X, H: H, X: V},
    "H": {V: V, H: X, X: H},
    "VH": {V: H, H: X, X: V},
    "HV": {V: X, H: V, X: H},
    "VHV": {V: H, H: V, X: X},
}

# Cayley table rows/columns in the order D, V, H, VH, HV, VHV (row element first)
CAYLEY = [
    ["D", "V", "H", "VH", "HV", "VHV"],
    ["V", "D", "VH", "H", "VHV", "HV"],
    ["H", "HV", "D", "VHV", "V", "VH"],
    ["VH", "VHV", "V", "HV", "D", "H"],
    ["HV", "H", "VHV", "D", "VH", "V"],
    ["VHV", "VH", "HV", "V", "H", "D"],
]


def test_single_moves():
    assert apply("V", H) == H
    assert apply("V", V) == X
    assert apply("H", H) == X
    for m in Matching:
        assert apply("D", m) == m


def test_apply_table():
    for word, row in APPLY_TABLE.items():
        g = GroupElement.from_word(word)
        for m, img in row.items():
            assert g(m) == img, (word, m)


def test_cayley_table():
    assert list(WORDS) == CAYLEY[0]
    got = [[g.word for g in row] for row in cayley_table()]
    assert got == CAYLEY


def test_long_word():
    assert compose("VVHHVHHV") == IDENTITY
    assert compose("VVHHVHHV").word == "D"
    assert compose("VV") == IDENTITY
    assert compose("VHVHVH") == IDENTITY


def test_orders():
    assert sorted(g.order() for g in ELEMENTS) == [1, 2, 2, 2, 3, 3]


@given(st.text("DVH", max_size=30), st.text("DVH", max_size=30))
def test_compose_is_homomorphism(a, b):
    assert compose(a + b) == compose(a).then(compose(b))


@given(st.text("DVH", max_size=30))
def test_words_cancel(s):
    # every atom is an involution, so a word followed by its reverse is neutral
    assert compose(s + s[::-1]) == IDENTITY


def test_formation_moves_match_letters():
    # the slot permutation of each quartet move acts on matchings as its letter says
    for mv in DIAGONAL + STRAIGHT + DOUBLE:
        assert effect_of_slot_perm(SLOT_MAP[mv]) == compose(kind(mv)), mv


@given(st.lists(st.sampled_from(DIAGONAL + STRAIGHT + DOUBLE), max_size=25))
def test_move_sequences(moves):
    letters = "".join(kind(m) for m in moves)
    assert effect_of_slot_perm(moves_slot_perm(moves)) == compose(letters)


def test_group_closed():
    els = set(ELEMENTS)
    assert len(els) == 6
    for a in ELEMENTS:
        for b in ELEMENTS:
            assert a.then(b) in els
    assert Counter(g.word for g in ELEMENTS) == Counter(WORDS)
