"""Turns and crossings of giraffe tours over w = 32k+20, h = 8l+14.

Fits metric = c0 + a*k + b*l by least squares and reports the residual,
which is zero when the growth is exactly linear.
"""
import argparse
from dataclasses import dataclass

import numpy as np

from leapertours import BoardDims, build_giraffe, metrics, validate


@dataclass
class GrowthConfig:
    max_k: int = 3
    max_l: int = 5


def main(argv=None):
    p = argparse.ArgumentParser(description="giraffe tour growth")
    p.add_argument("--max-k", type=int, default=GrowthConfig.max_k)
    p.add_argument("--max-l", type=int, default=GrowthConfig.max_l)
    a = p.parse_args(argv)
    cfg = GrowthConfig(a.max_k, a.max_l)
    rows = []
    print("%4s %4s %3s %3s %6s %9s" % ("w", "h", "k", "l", "turns", "crossings"))
    for k in range(1, cfg.max_k + 1):
        for l in range(1, cfg.max_l + 1):
            w, h = 32 * k + 20, 8 * l + 14
            t = build_giraffe(BoardDims.wh(w, h))
            assert validate(t).ok, (w, h)
            m = metrics(t)
            rows.append((k, l, m.turns, m.crossings))
            print("%4d %4d %3d %3d %6d %9d" % (w, h, k, l, m.turns, m.crossings))
    X = np.array([[1, k, l] for k, l, _, _ in rows], dtype=float)
    for col, name in ((2, "turns"), (3, "crossings")):
        y = np.array([r[col] for r in rows], dtype=float)
        coef, *_ = np.linalg.lstsq(X, y, rcond=None)
        resid = float(np.abs(X @ coef - y).max())
        print("%-9s = %.2f %+.2f k %+.2f l   (max residual %.2g)" % (name, *coef, resid))


if __name__ == "__main__":
    main()
