"""Exhaustive search on small boards: does a closed tour exist, and the fewest turns/crossings."""
import argparse
from dataclasses import dataclass, field

from leapertours import BoardDims
from leapertours.oracle import find_closed_tour, min_metric_tour


@dataclass
class OracleTableConfig:
    boards: list = field(default_factory=lambda: [(6, 3), (8, 3), (10, 3), (6, 4), (5, 6), (6, 5)])
    budget: int = 2_000_000


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--budget", type=int, default=OracleTableConfig.budget)
    cfg = OracleTableConfig(budget=p.parse_args(argv).budget)
    print("%6s %6s %6s %10s" % ("board", "tour", "turns", "crossings"))
    for w, h in cfg.boards:
        dims = BoardDims.wh(w, h)
        exists = find_closed_tour(dims) is not None
        vals = []
        for metric in ("TURNS", "CROSSINGS"):
            if not exists:
                vals.append("-")
                continue
            r = min_metric_tour(dims, metric, cfg.budget)
            vals.append("%d%s" % (r.value, "" if r.optimal else "?"))
        print("%6s %6s %6s %10s" % ("%dx%d" % (w, h), "yes" if exists else "no", *vals))
    print("('?' marks a value found before the search budget ran out)")


if __name__ == "__main__":
    main()
