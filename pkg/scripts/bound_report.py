"""Edge crossing lower bound: config graph size, min mean cycle and a witness.

Also compares Karp's algorithm with exhaustive enumeration on random small graphs.
"""
import argparse
import json
import random
import time
from dataclasses import dataclass

import numpy as np

from leapertours import Leaper
from leapertours.crossing_bound import INF, NoCycle, crossing_bound_report, min_mean_cycle, min_mean_cycle_bruteforce


@dataclass
class BoundConfig:
    leaper: tuple = (1, 2)
    random_graphs: int = 100
    max_nodes: int = 7
    seed: int = 0


def karp_check(cfg: BoundConfig):
    rng = random.Random(cfg.seed)
    agree = total = 0
    while total < cfg.random_graphs:
        n = rng.randint(1, cfg.max_nodes)
        w = np.full((n, n), INF, dtype=np.int64)
        for u in range(n):
            for v in range(n):
                if rng.random() < 0.4:
                    w[u, v] = rng.randint(-5, 9)
        try:
            want = min_mean_cycle_bruteforce(w)
        except NoCycle:
            continue
        total += 1
        agree += min_mean_cycle(w)[0] == want
    return agree, total


def main(argv=None):
    p = argparse.ArgumentParser(description="crossing lower bound report")
    p.add_argument("--leaper", default="1,2")
    p.add_argument("--random-graphs", type=int, default=BoundConfig.random_graphs)
    p.add_argument("--seed", type=int, default=0)
    a = p.parse_args(argv)
    cfg = BoundConfig(tuple(int(x) for x in a.leaper.split(",")), a.random_graphs, seed=a.seed)
    t0 = time.perf_counter()
    rep = crossing_bound_report(Leaper(*cfg.leaper))
    print(json.dumps(rep.to_dict(), indent=2))
    print("computed in %.1fs" % (time.perf_counter() - t0))
    agree, total = karp_check(cfg)
    print("Karp vs enumeration: %d/%d agree" % (agree, total))


if __name__ == "__main__":
    main()
