"""Connected forcing counts of trees: closed form against enumeration.

Prints z_c(T; d) for every d on a set of trees (the 12-vertex example in
data/, a few spiders and random trees) together with the brute-force count
and the time each method took.

    python scripts/tree_profiles.py [--random 5] [--max-n 18] [--seed 0]
"""

import argparse
import random
import time
from dataclasses import dataclass
from pathlib import Path

from cfdense import families as F
from cfdense import solvers, trees
from cfdense.graph import parse_graph

DATA = Path(__file__).resolve().parents[1] / "data"


@dataclass
class ProfileConfig:
    random_trees: int = 5
    max_n: int = 18
    seed: int = 0


def profile(label: str, T) -> bool:
    t0 = time.perf_counter()
    closed = solvers.count_profile(T).values
    t1 = time.perf_counter()
    brute = solvers.count_profile(T, closed_form=False).values
    t2 = time.perf_counter()
    same = closed == brute
    counts = " ".join(str(closed[d]) for d in range(1, T.n + 1))
    print(f"{label:28s} n={T.n:<3d} Zc={trees.tree_zc(T):<3d} M-sets={len(trees.enumerate_m_sets(T)):<4d} "
          f"{'agree' if same else 'DIFFER'}  closed {1e3 * (t1 - t0):7.2f} ms  brute {1e3 * (t2 - t1):8.2f} ms")
    print(f"{'':28s} z_c(T; 1..n) = {counts}")
    return same


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--random", type=int, default=5)
    ap.add_argument("--max-n", type=int, default=18)
    ap.add_argument("--seed", type=int, default=0)
    a = ap.parse_args()
    cfg = ProfileConfig(a.random, a.max_n, a.seed)

    cases = [("twelve_vertex_tree.txt", parse_graph((DATA / "twelve_vertex_tree.txt").read_text()))]
    cases += [(f"spider{legs}", F.spider(legs)) for legs in ((1, 1, 1), (2, 2, 2), (1, 2, 3), (3, 3, 3, 3))]
    cases += [(f"star{n}", F.star(n)) for n in (5, 8)]
    rng = random.Random(cfg.seed)
    while len(cases) < 7 + cfg.random_trees:
        T = F.random_tree(rng.randint(8, cfg.max_n), rng)
        if not T.is_path():
            cases.append((f"random tree #{len(cases) - 6}", T))
    ok = all([profile(label, T) for label, T in cases])
    return 0 if ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
