"""Z, Zt, Zc and ZF/TF/CF density for the named graph families.

    python scripts/family_table.py [--max-n 16] [--csv]
"""

import argparse
from dataclasses import dataclass

from cfdense import families as F
from cfdense import solvers


@dataclass
class TableConfig:
    max_n: int = 16
    csv: bool = False


def family_rows(max_n: int):
    rows = [(f"C{n}", F.cycle(n)) for n in range(3, 9)]
    rows += [(f"K{n}", F.complete(n)) for n in range(2, 8)]
    rows += [(f"W{n}", F.wheel(n)) for n in range(4, 9)]
    rows += [(f"S{n}", F.star(n)) for n in range(3, 8)]
    rows += [(f"Q{k}", F.hypercube(k)) for k in (2, 3, 4)]
    rows += [(f"K{p}", F.complete_multipartite(p)) for p in ((2, 2), (2, 3), (3, 3), (2, 2, 2), (1, 2, 3))]
    rows += [(f"N{k}", F.diamond_necklace(k)) for k in (2, 3, 4)]
    return [(label, G) for label, G in rows if G.n <= max_n]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=16)
    ap.add_argument("--csv", action="store_true")
    a = ap.parse_args()
    cfg = TableConfig(a.max_n, a.csv)

    header = ["graph", "n", "delta", "Z", "Zt", "Zc", "ZF", "TF", "CF"]
    print(",".join(header) if cfg.csv else "  ".join(f"{h:>8s}" for h in header))
    for label, G in family_rows(cfg.max_n):
        vals = [solvers.forcing_number(G, v).value for v in ("Z", "Zt", "Zc")]
        dense = ["y" if solvers.density(G, v).dense else "n" for v in ("ZF", "TF", "CF")]
        row = [label, G.n, G.min_degree(), *vals, *dense]
        print(",".join(map(str, row)) if cfg.csv else "  ".join(f"{str(x):>8s}" for x in row))


if __name__ == "__main__":
    main()
