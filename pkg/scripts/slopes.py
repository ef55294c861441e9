"""Fit turns and crossings of n x n knight tours against n.

    python scripts/slopes.py --start 40 --stop 120 --step 8 [--csv out.csv]
"""
import argparse
import csv
import sys
from dataclasses import dataclass

import numpy as np

from leapertours import build_wh, metrics


@dataclass
class SlopeConfig:
    start: int = 40
    stop: int = 120
    step: int = 8
    csv: str = ""


def measure(cfg: SlopeConfig):
    rows = []
    for n in range(cfg.start, cfg.stop + 1, cfg.step):
        m = metrics(build_wh(n, n))
        rows.append((n, m.turns, m.crossings))
    return rows


def fit(rows):
    ns = np.array([r[0] for r in rows])
    out = {}
    for k, name in ((1, "turns"), (2, "crossings")):
        slope, icpt = np.polyfit(ns, [r[k] for r in rows], 1)
        out[name] = (float(slope), float(icpt))
    return out


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for f, v in vars(SlopeConfig()).items():
        p.add_argument("--" + f, type=type(v), default=v)
    cfg = SlopeConfig(**vars(p.parse_args(argv)))
    rows = measure(cfg)
    print("%5s %7s %9s" % ("n", "turns", "crossings"))
    for n, t, c in rows:
        print("%5d %7d %9d" % (n, t, c))
    for name, (s, b) in fit(rows).items():
        print("%-9s = %.4f n %+.1f" % (name, s, b))
    if cfg.csv:
        with open(cfg.csv, "w", newline="") as f:
            w = csv.writer(f)
            w.writerow(["n", "turns", "crossings"])
            w.writerows(rows)


if __name__ == "__main__":
    sys.exit(main())
