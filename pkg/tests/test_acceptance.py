"""Acceptance checks 1-9; each prints one PASS/FAIL line.

Run with pytest (the lines are repeated in the terminal summary) or directly:
    python tests/test_acceptance.py
"""
import random
import sys
import time
from collections import Counter
from fractions import Fraction
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).resolve().parent))

from leapertours import (  # noqa: E402
    BoardDims, Tour, UnsupportedDims, build_giraffe, build_multidim, build_odd, build_symmetric, build_wh,
    cell_at, count_crossings, count_crossings_bruteforce, find_closed_tour, index_of, metrics, plan, validate,
)
from leapertours.crossing_bound import (  # noqa: E402
    INF, NoCycle, build_config_graph, min_mean_cycle, min_mean_cycle_bruteforce, split_node_weights,
)
from leapertours.matching import ELEMENTS, WORDS, cayley_table, compose  # noqa: E402
from leapertours.oddsym import ODD_EDGE, rotated_move_set  # noqa: E402
from leapertours.tour2d import heel_metrics  # noqa: E402
from walks import perturb, random_walk  # noqa: E402

SLOPE_GRID = list(range(40, 121, 8))
TURN_SLOPE, CROSS_SLOPE, SLOPE_TOL = 9.5, 13.0, 0.05
SWEEP_SECONDS = 30.0
INDEX_RATIO = 3.0

# Cayley table of the matching group, rows and columns D, V, H, VH, HV, VHV
CAYLEY = [
    ["D", "V", "H", "VH", "HV", "VHV"],
    ["V", "D", "VH", "H", "VHV", "HV"],
    ["H", "HV", "D", "VHV", "V", "VH"],
    ["VH", "VHV", "V", "HV", "D", "H"],
    ["HV", "H", "VHV", "D", "VH", "V"],
    ["VHV", "VH", "HV", "V", "H", "D"],
]

RESULTS = []


def report(n, ok, detail):
    line = "[%s] criterion %d: %s" % ("PASS" if ok else "FAIL", n, detail)
    RESULTS.append(line)
    print(line)
    assert ok, line


def test_1_validity_sweep():
    t0 = time.perf_counter()
    bad = []
    count = 0
    for w in range(16, 65, 2):
        for h in range(12, 65):
            count += 1
            if not validate(build_wh(w, h)).ok:
                bad.append((w, h))
    dt = time.perf_counter() - t0
    report(1, not bad and dt < SWEEP_SECONDS,
           "%d boards, %d invalid, %.1fs (limit %.0fs)" % (count, len(bad), dt, SWEEP_SECONDS))


def _slope(values):
    return float(np.polyfit(SLOPE_GRID, values, 1)[0])


def _width_steps(field):
    out = set()
    for h in (40, 41, 57):
        for w in range(40, 64, 2):
            a, b = metrics(build_wh(w, h)), metrics(build_wh(w + 8, h))
            out.add(getattr(b, field) - getattr(a, field))
    return out


def test_2_turn_slope():
    s = _slope([metrics(build_wh(n, n), crossings=False).turns for n in SLOPE_GRID])
    steps = _width_steps("turns")
    report(2, abs(s - TURN_SLOPE) <= SLOPE_TOL and steps == {44},
           "slope %.4f (want %.1f +- %.2f), turns(w+8)-turns(w) in %s" % (s, TURN_SLOPE, SLOPE_TOL, sorted(steps)))


def test_3_crossing_slope():
    s = _slope([metrics(build_wh(n, n)).crossings for n in SLOPE_GRID])
    steps = _width_steps("crossings")
    report(3, abs(s - CROSS_SLOPE) <= SLOPE_TOL and steps == {64},
           "slope %.4f (want %.1f +- %.2f), crossings(w+8)-crossings(w) in %s"
           % (s, CROSS_SLOPE, SLOPE_TOL, sorted(steps)))


def test_4_heel_constants():
    got = heel_metrics()
    report(4, got == (22, 32), "heel (turns, crossings) = %s, want (22, 32)" % (got,))


def _random_graph(rng, n):
    w = np.full((n, n), INF, dtype=np.int64)
    for u in range(n):
        for v in range(n):
            if rng.random() < 0.4:
                w[u, v] = rng.randint(-5, 9)
    return w


def test_5_lower_bound():
    g = build_config_graph()
    mean, _ = min_mean_cycle(split_node_weights(g))
    rng = random.Random(5)
    agree = total = 0
    while total < 100:
        w = _random_graph(rng, rng.randint(1, 7))
        try:
            want = min_mean_cycle_bruteforce(w)
        except NoCycle:
            continue
        total += 1
        agree += min_mean_cycle(w)[0] == want
    report(5, g.n == 216 and mean == Fraction(3) and agree == total,
           "%d nodes, min mean %s, Karp = enumeration on %d/%d graphs" % (g.n, mean, agree, total))


def test_6_group_algebra():
    table = [[x.word for x in row] for row in cayley_table()]
    entries = sum(a == b for ra, rb in zip(table, CAYLEY) for a, b in zip(ra, rb))
    word = compose("VVHHVHHV").word
    orders = sorted(Counter(g.order() for g in ELEMENTS).elements())
    ok = list(WORDS) == CAYLEY[0] and entries == 36 and word == "D" and orders == [1, 2, 2, 2, 3, 3]
    report(6, ok, "%d/36 table entries, VVHHVHHV = %s, orders %s" % (entries, word, orders))


def _per_query(w, h, n=20000):
    p = plan(BoardDims.wh(w, h))
    cell_at(p, 0)
    rng = random.Random(w * h)
    qs = [rng.randrange(w * h) for _ in range(n)]
    best = None
    for _ in range(3):
        t0 = time.perf_counter()
        for i in qs:
            index_of(p, cell_at(p, i))
        dt = (time.perf_counter() - t0) / n
        best = dt if best is None else min(best, dt)
    return best


def test_7_indexing():
    mismatches = 0
    for w, h in ((30, 30), (48, 40)):
        p = plan(BoardDims.wh(w, h))
        for i, c in enumerate(build_wh(w, h).cells):
            mismatches += cell_at(p, i) != c or index_of(p, c) != i
    small, big = _per_query(30, 30), _per_query(300, 300)
    ratio = big / small
    report(7, mismatches == 0 and ratio <= INDEX_RATIO,
           "%d mismatches on 30x30 and 48x40; per query %.1fus (30x30) vs %.1fus (300x300), ratio %.2f (limit %.0f)"
           % (mismatches, small * 1e6, big * 1e6, ratio, INDEX_RATIO))


def test_8_extensions():
    checks = {}
    checks["multidim 12x16x5"] = validate(build_multidim((12, 16, 5))).ok
    checks["multidim 26^3"] = validate(build_multidim((26, 26, 26))).ok
    odd = build_odd(BoardDims.wh(17, 13))
    checks["odd 17x13"] = validate(odd, {(0, 0)}).ok and frozenset(ODD_EDGE) in odd.move_set()
    sym = build_symmetric(38)
    checks["symmetric 38"] = validate(sym).ok and rotated_move_set(sym) == sym.move_set()
    checks["giraffe 52x30"] = validate(build_giraffe(BoardDims.wh(52, 30))).ok
    failed = [k for k, v in checks.items() if not v]
    report(8, not failed, "%d/%d valid%s" % (len(checks) - len(failed), len(checks),
                                           "; failed: " + ", ".join(failed) if failed else ""))


def test_9_oracle_equivalence():
    built = diff = 0
    for w in range(12, 41):
        for h in range(12, 41):
            try:
                t = build_wh(w, h)
            except UnsupportedDims:
                continue
            built += 1
            diff += count_crossings(t) != count_crossings_bruteforce(t)
    for w in range(17, 40, 2):
        for h in range(13, 40, 2):
            t = build_odd(BoardDims.wh(w, h))
            built += 1
            diff += count_crossings(t) != count_crossings_bruteforce(t)
    rng = random.Random(9)
    paths = 0
    base = build_wh(16, 12).cells
    for k in range(200):
        if k % 2:
            cells = perturb(rng, base, steps=10)
            dims = BoardDims.wh(16, 12)
        else:
            w, h = rng.randint(5, 24), rng.randint(5, 24)
            cells = random_walk(rng, w, h, rng.randint(10, 300))
            dims = BoardDims.wh(w, h)
        t = Tour(dims, cells, closed=False)
        paths += 1
        diff += count_crossings(t) != count_crossings_bruteforce(t)
    none46 = find_closed_tour(BoardDims.wh(6, 4)) is None
    none36 = find_closed_tour(BoardDims.wh(6, 3)) is None
    report(9, diff == 0 and none46 and none36,
           "%d built tours + %d random paths, %d disagreements; no tour on 4x6: %s, on 3x6: %s"
           % (built, paths, diff, none46, none36))


if __name__ == "__main__":
    failed = 0
    for name, fn in list(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
