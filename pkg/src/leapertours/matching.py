"""Positional matchings of a quartet and the permutation group acting on them."""
from __future__ import annotations

from enum import Enum
from itertools import product


class Matching(Enum):
    HORIZONTAL = "H"  # (tl,tr), (bl,br)
    VERTICAL = "V"  # (tl,bl), (tr,br)
    CROSS = "X"  # (tl,br), (tr,bl)


class MoveKind(Enum):
    D = "D"
    V = "V"
    H = "H"


_ORDER = (Matching.HORIZONTAL, Matching.VERTICAL, Matching.CROSS)
_IDX = {m: i for i, m in enumerate(_ORDER)}

# images of (HORIZONTAL, VERTICAL, CROSS)
_ATOMS = {
    MoveKind.D: (0, 1, 2),
    MoveKind.V: (0, 2, 1),
    MoveKind.H: (2, 1, 0),
}

WORDS = ("D", "V", "H", "VH", "HV", "VHV")


def _then(p, q):
    # p first, then q
    return tuple(q[p[i]] for i in range(3))


def _word_perm(word):
    perm = (0, 1, 2)
    for ch in word:
        perm = _then(perm, _ATOMS[MoveKind(ch)])
    return perm


_PERM_TO_WORD = {_word_perm(w): w for w in WORDS}
assert len(_PERM_TO_WORD) == 6


class GroupElement:
    __slots__ = ("perm",)

    def __init__(self, perm):
        self.perm = tuple(perm)

    @classmethod
    def from_word(cls, word: str) -> "GroupElement":
        return cls(_word_perm("" if word == "D" else word))

    @property
    def word(self) -> str:
        return _PERM_TO_WORD[self.perm]

    def __call__(self, m: Matching) -> Matching:
        return _ORDER[self.perm[_IDX[m]]]

    def then(self, other: "GroupElement") -> "GroupElement":
        return GroupElement(_then(self.perm, other.perm))

    def order(self) -> int:
        p, k = self.perm, 1
        while p != (0, 1, 2):
            p = _then(p, self.perm)
            k += 1
        return k

    def __eq__(self, other):
        return isinstance(other, GroupElement) and self.perm == other.perm

    def __hash__(self):
        return hash(self.perm)

    def __repr__(self):
        return f"GroupElement({self.word})"


IDENTITY = GroupElement((0, 1, 2))
ELEMENTS = tuple(GroupElement.from_word(w) for w in WORDS)


def _kind(x) -> MoveKind:
    return x if isinstance(x, MoveKind) else MoveKind(x)


def apply(move, m: Matching) -> Matching:
    return _ORDER[_ATOMS[_kind(move)][_IDX[m]]]


def compose(seq) -> GroupElement:
    """Group element of doing the moves of `seq` in order (first move applied first)."""
    g = IDENTITY
    for s in seq:
        g = g.then(GroupElement(_ATOMS[_kind(s)]))
    return g


def cayley_table():
    """6x6 table; entry [i][j] is ELEMENTS[i] followed by ELEMENTS[j]."""
    return [[a.then(b) for b in ELEMENTS] for a in ELEMENTS]


def words_upto(n):
    for k in range(n + 1):
        yield from product("DVH", repeat=k)


def matching_of_pairs(pairs) -> Matching:
    """Matching from two slot pairs (slots 0=bl, 1=br, 2=tl, 3=tr)."""
    key = frozenset(frozenset(p) for p in pairs)
    table = {
        frozenset({frozenset({2, 3}), frozenset({0, 1})}): Matching.HORIZONTAL,
        frozenset({frozenset({2, 0}), frozenset({3, 1})}): Matching.VERTICAL,
        frozenset({frozenset({2, 1}), frozenset({3, 0})}): Matching.CROSS,
    }
    return table[key]


def effect_of_slot_perm(perm) -> GroupElement:
    """Action on matchings of a slot permutation (old slot -> new slot)."""
    pairs = {
        Matching.HORIZONTAL: ((2, 3), (0, 1)),
        Matching.VERTICAL: ((2, 0), (3, 1)),
        Matching.CROSS: ((2, 1), (3, 0)),
    }
    img = []
    for m in _ORDER:
        moved = [(perm[a], perm[b]) for a, b in pairs[m]]
        img.append(_IDX[matching_of_pairs(moved)])
    return GroupElement(img)
