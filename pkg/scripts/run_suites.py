"""Run every verification suite and print a one-line summary per suite.

    python scripts/run_suites.py                 # all suites, default sizes
    python scripts/run_suites.py --suite join --seed 3 --json out.json
"""

import argparse
import json
import time
from dataclasses import asdict, dataclass

from cfdense import verify


@dataclass
class RunConfig:
    suites: tuple[str, ...] = tuple(verify.SUITES)
    seed: int = 0
    max_n: int | None = None
    samples: int | None = None
    json_path: str | None = None


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--suite", action="append", choices=sorted(verify.SUITES))
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-n", type=int)
    ap.add_argument("--samples", type=int)
    ap.add_argument("--json", dest="json_path")
    a = ap.parse_args()
    cfg = RunConfig(tuple(a.suite or verify.SUITES), a.seed, a.max_n, a.samples, a.json_path)

    reports, ok = {}, True
    for name in cfg.suites:
        start = time.perf_counter()
        rep = verify.run_suite(name, verify.VerifyConfig(max_n=cfg.max_n, seed=cfg.seed, samples=cfg.samples))
        secs = time.perf_counter() - start
        d = rep.to_dict()
        reports[name] = d
        ok &= rep.passed
        print(f"{name:16s} {'pass' if rep.passed else 'FAIL':4s} checked={d['checked']:>9d} "
              f"failures={d['failures']:<4d} {secs:7.1f}s")
        for note in rep.notes:
            print(f"{'':16s} note: {note}")
    if cfg.json_path:
        with open(cfg.json_path, "w") as fh:
            json.dump({"config": asdict(cfg), "reports": reports}, fh, indent=1)
    return 0 if ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
