"""How often do the density-preservation conditions fire, and how often is
the result dense anyway?

For every pair from the small-graph pools the script solves the operation's
result directly and tabulates, per operation and variant, the pairs where a
guarantee applies, where the result is dense, and any guarantee that fails.

    python scripts/operation_survey.py [--max-n 3]
"""

import argparse
from collections import Counter
from dataclasses import dataclass

from cfdense import verify
from cfdense.graph import Graph
from cfdense.predictions import GUARANTEED, build, check_density_preservation
from cfdense.solvers import DENSITY_VARIANTS, density


@dataclass
class SurveyConfig:
    max_n: int = 3


def defined(G: Graph, variant: str) -> bool:
    if variant == "CF":
        return G.is_connected()
    if variant == "TF":
        return not G.has_isolated_vertex()
    return True


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=3)
    cfg = SurveyConfig(ap.parse_args().max_n)

    pool = verify.small_graphs(cfg.max_n, lambda G: not G.has_isolated_vertex() or G.n == 1)
    broken = 0
    print(f"{'operation':10s} {'variant':7s} {'pairs':>6s} {'guaranteed':>11s} {'dense':>6s} {'dense, not implied':>19s}")
    for op in ("cartesian", "join", "corona"):
        tally = {v: Counter() for v in DENSITY_VARIANTS}
        for G in pool:
            for H in pool:
                product = build(G, H, op)
                pred = check_density_preservation(G, H, op)
                for v in DENSITY_VARIANTS:
                    if not defined(product, v):
                        continue
                    dense = density(product, v).dense
                    guaranteed = pred.conclusion_density[v].status == GUARANTEED
                    t = tally[v]
                    t["pairs"] += 1
                    t["guaranteed"] += guaranteed
                    t["dense"] += dense
                    t["free"] += dense and not guaranteed
                    if guaranteed and not dense:
                        broken += 1
                        print(f"  guarantee fails: {op} {v} G={G.edges} (n={G.n}) H={H.edges} (n={H.n})")
        for v, t in tally.items():
            print(f"{op:10s} {v:7s} {t['pairs']:6d} {t['guaranteed']:11d} {t['dense']:6d} {t['free']:19d}")
    return 1 if broken else 0


if __name__ == "__main__":
    raise SystemExit(main())
