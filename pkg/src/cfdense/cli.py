"""Command-line front end.

Every command except ``gen`` prints one JSON ``CommandOutcome`` object:
successes go to stdout, errors to stderr. Exit codes: 0 ok, 1 domain error
(bad graph, unmet precondition, budget exceeded, failing verify suite),
2 usage error.

Graph sources are a file path, ``-`` for stdin, or ``gen:<family>:<args>``
(e.g. ``gen:wheel:6``, ``gen:spider:2,2,3``); single-graph commands also
accept ``--gen <family>:<args>``.
"""

from __future__ import annotations

import argparse
import json
import multiprocessing
import sys
import time
from typing import Callable

from . import families, solvers, trees, verify
from .forcing import ForcingError
from .graph import Graph, GraphError, parse_graph, render_graph
from .predictions import OPERATIONS, build, check_density_preservation, predict_operation, verify_prediction

SCHEMA_VERSION = "1.0"
EXIT_OK, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2


class CommandError(Exception):
    def __init__(self, code: str, message: str, exit_code: int = EXIT_DOMAIN, payload: dict | None = None):
        super().__init__(message)
        self.code = code
        self.exit_code = exit_code
        self.payload = payload


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        _emit(_outcome(sys.argv[1:], "error", None, 0, {"code": "usage", "message": message}), sys.stderr)
        self.exit(EXIT_USAGE)


def _outcome(argv, status, payload, elapsed_ms, error=None) -> dict:
    out = {
        "schema_version": SCHEMA_VERSION,
        "command": list(argv),
        "status": status,
        "payload": payload,
        "elapsed_ms": int(elapsed_ms),
    }
    if error is not None:
        out["error"] = error
    return out


def _emit(obj: dict, stream) -> None:
    stream.write(json.dumps(obj) + "\n")
    stream.flush()


# --- graph sources ----------------------------------------------------------

def load_graph(source: str, stdin=None, lenient: bool = False) -> Graph:
    if source.startswith("gen:"):
        return families.generate_family(families.FamilySpec.parse(source[4:]))
    if source == "-":
        text = (stdin or sys.stdin).read()
    else:
        try:
            with open(source) as fh:
                text = fh.read()
        except OSError as e:
            raise CommandError("unreadable_source", f"cannot read {source!r}: {e.strerror}") from None
    return parse_graph(text, strict=not lenient)


def single_source(args) -> Graph:
    given = [s for s in (args.source, f"gen:{args.gen}" if args.gen else None) if s]
    if len(given) != 1:
        raise CommandError("usage", "give exactly one graph source (path, '-', or --gen)", EXIT_USAGE)
    G = load_graph(given[0], lenient=args.lenient)
    _guard_size(G, args.max_n)
    return G


def _guard_size(G: Graph, max_n: int | None) -> None:
    if max_n is not None and G.n > max_n:
        raise CommandError("budget_exceeded", f"graph has {G.n} vertices, limit is {max_n}")


# --- commands -----------------------------------------------------------------

def _family_spec(args) -> families.FamilySpec:
    kind = families.ALIASES.get(args.family, args.family)
    if kind not in families.KINDS:
        raise GraphError("bad_family", f"unknown family {args.family!r}")
    seq = args.parts or args.legs or args.pruefer
    parts = tuple(int(x) for x in seq.split(",") if x.strip()) if seq else ()
    return families.FamilySpec(kind, n=args.n, k=args.k, parts=parts)


def cmd_solve(args, G: Graph) -> dict:
    variant = solvers.normalize_variant(args.variant)
    res = solvers.forcing_number(G, variant)
    payload = {"result": res.to_dict()}
    if args.enumerate:
        payload["minimum_sets"] = [s.to_list() for s in solvers.sets_of_size(G, variant, res.value)]
    if args.count_size is not None:
        payload["count"] = {"size": args.count_size, "value": solvers.count_cf_sets(G, args.count_size)}
    if args.profile:
        payload["profile"] = solvers.count_profile(G, closed_form=not args.brute_force).to_dict()
    return payload


def cmd_dense(args, G: Graph) -> dict:
    if args.variant != "all":
        return {"report": solvers.density(G, args.variant.upper()).to_dict()}
    reports, dense = {}, {}
    for v in ("ZF", "TF", "CF"):
        try:
            rep = solvers.density(G, v)
            reports[v] = rep.to_dict()
            dense[v] = rep.dense
        except solvers.SolverError as e:
            reports[v] = {"variant": v, "error": {"code": e.code, "message": str(e)}}
            dense[v] = False
    combined = {
        "ZTF": dense["ZF"] and dense["TF"],
        "ZCF": dense["ZF"] and dense["CF"],
        "TCF": dense["TF"] and dense["CF"],
        "ZTCF": all(dense.values()),
    }
    return {"reports": reports, "combined": combined}


def cmd_tree(args, T: Graph) -> dict:
    action = args.action
    if action == "decompose":
        return {"decomposition": trees.pendant_decomposition(T).to_dict()}
    if action == "cfdense":
        return {"cf_dense": trees.is_cf_dense_tree(T)}
    if action == "msets":
        return {"m_sets": [s.to_list() for s in trees.enumerate_m_sets(T)]}
    if action == "zc":
        return {"zc": trees.tree_zc(T)}
    if action == "count":
        if args.d is not None:
            return {"d": args.d, "count": trees.tree_count(T, args.d), "method": "closed_form"}
        return {"profile": solvers.count_profile(T).to_dict()}
    raise CommandError("usage", f"unknown tree action {action!r}", EXIT_USAGE)


def cmd_op(args, G: Graph, H: Graph) -> dict:
    product = build(G, H, args.op)
    payload: dict = {
        "operation": args.op,
        "graph": {"n": product.n, "m": product.m, "edges": [list(e) for e in product.edges]},
    }
    if args.check_density:
        payload["prediction"] = check_density_preservation(G, H, args.op, verify=args.verify).to_dict()
    elif args.predict:
        pred = verify_prediction(G, H, args.op) if args.verify else predict_operation(G, H, args.op)
        payload["prediction"] = pred.to_dict()
    return payload


def cmd_verify(args) -> dict:
    if args.suite not in verify.SUITES:
        raise CommandError("unknown_suite", f"unknown suite {args.suite!r}; choose from {sorted(verify.SUITES)}")
    cfg = verify.VerifyConfig(max_n=args.max_n, seed=args.seed, samples=args.samples)
    rep = verify.run_suite(args.suite, cfg).to_dict()
    if args.failures_only:
        rep["instances"] = [r for r in rep["instances"] if not r["pass"]]
    if not rep["passed"]:
        raise CommandError("verification_failed", f"{rep['failures']} check(s) failed", payload=rep)
    return rep


SINGLE_GRAPH = {"solve": cmd_solve, "dense": cmd_dense, "tree": cmd_tree}


def prepare(args) -> Callable[[argparse.Namespace], dict]:
    """Load the command's graphs up front so a budgeted child never reads stdin."""
    if args.command in SINGLE_GRAPH:
        G = single_source(args)
        fn = SINGLE_GRAPH[args.command]
        return lambda a: fn(a, G)
    if args.command == "op":
        G = load_graph(args.left, lenient=args.lenient)
        H = load_graph(args.right, lenient=args.lenient)
        _guard_size(G, args.max_n)
        _guard_size(H, args.max_n)
        return lambda a: cmd_op(a, G, H)
    return cmd_verify


# --- budget -------------------------------------------------------------------

def _child(fn, args, conn):
    try:
        conn.send(("ok", fn(args)))
    except BaseException as e:  # report everything to the parent
        conn.send(("raise", _error_info(e)))
    finally:
        conn.close()


def _error_info(e: BaseException) -> tuple[str, str, int, dict | None]:
    if isinstance(e, CommandError):
        return e.code, str(e), e.exit_code, e.payload
    if isinstance(e, (GraphError, solvers.SolverError, ForcingError)):
        return e.code, str(e), EXIT_DOMAIN, None
    if isinstance(e, solvers.UniquenessViolation):
        return "uniqueness_violation", str(e), EXIT_DOMAIN, None
    if isinstance(e, ValueError):
        return "invalid_argument", str(e), EXIT_DOMAIN, None
    return "internal_error", f"{type(e).__name__}: {e}", EXIT_DOMAIN, None


def run_with_budget(fn, args, budget_ms: int | None) -> dict:
    """Run ``fn(args)``; with a budget, run it in a forked child and kill it
    when the budget runs out."""
    if budget_ms is None:
        return fn(args)
    ctx = multiprocessing.get_context("fork")
    parent, child = ctx.Pipe(duplex=False)
    proc = ctx.Process(target=_child, args=(fn, args, child))
    proc.start()
    child.close()
    ready = parent.poll(budget_ms / 1000.0)
    if not ready:
        proc.kill()
        proc.join()
        raise CommandError("budget_exceeded", f"no result within {budget_ms} ms")
    kind, value = parent.recv()
    proc.join()
    if kind == "ok":
        return value
    code, message, exit_code, payload = value
    raise CommandError(code, message, exit_code, payload)


# --- argument parsing -----------------------------------------------------------

def _add_source(p: argparse.ArgumentParser) -> None:
    p.add_argument("source", nargs="?", help="edge-list file, '-' for stdin, or gen:<family>:<args>")
    p.add_argument("--gen", metavar="FAMILY:ARGS", help="inline family, e.g. wheel:6 or spider:2,2,3")
    p.add_argument("--lenient", action="store_true", help="collapse duplicate edge lines")
    _add_guards(p)


def _add_guards(p: argparse.ArgumentParser) -> None:
    p.add_argument("--budget-ms", type=int, help="wall-clock limit; exceeded -> budget_exceeded error")
    p.add_argument("--max-n", type=int, help="refuse graphs with more vertices")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="cfdense", description="Zero, total and connected forcing toolkit.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("gen", help="print a named family as an edge list")
    g.add_argument("--family", required=True)
    g.add_argument("--n", type=int)
    g.add_argument("--k", type=int)
    g.add_argument("--parts", help="part sizes for complete_multipartite, e.g. 2,2,3")
    g.add_argument("--legs", help="leg lengths for spider, e.g. 1,2,2")
    g.add_argument("--pruefer", help="Prüfer sequence for tree, e.g. 0,0,1")

    s = sub.add_parser("solve", help="exact Z / Zt / Zc")
    _add_source(s)
    s.add_argument("--variant", default="zc", choices=["z", "zt", "zc"])
    s.add_argument("--enumerate", action="store_true", help="list all minimum sets")
    s.add_argument("--count-size", type=int, metavar="I", help="number of connected forcing sets of size I")
    s.add_argument("--profile", action="store_true", help="connected forcing counts for every size")
    s.add_argument("--brute-force", action="store_true", help="profile by enumeration only")
    s.add_argument("--csv", action="store_true", help="print the profile as CSV instead of JSON")

    d = sub.add_parser("dense", help="ZF/TF/CF density with witnesses")
    _add_source(d)
    d.add_argument("--variant", default="all", choices=["zf", "tf", "cf", "all"])

    t = sub.add_parser("tree", help="tree analytics")
    t.add_argument("action", choices=["decompose", "msets", "zc", "cfdense", "count"])
    _add_source(t)
    t.add_argument("--d", type=int, help="set size for count")
    t.add_argument("--csv", action="store_true", help="print the count profile as CSV")

    o = sub.add_parser("op", help="Cartesian product, join or corona")
    o.add_argument("--op", required=True, choices=list(OPERATIONS))
    o.add_argument("left", help="first operand source")
    o.add_argument("right", help="second operand source")
    o.add_argument("--lenient", action="store_true")
    o.add_argument("--predict", action="store_true", help="predicted Z, Zt, Zc")
    o.add_argument("--check-density", action="store_true", help="density preservation conditions")
    o.add_argument("--verify", action="store_true", help="solve the result directly and compare")
    o.add_argument("--render", action="store_true", help="print the resulting edge list only")
    _add_guards(o)

    v = sub.add_parser("verify", help="run a verification sweep")
    v.add_argument("--suite", required=True)
    v.add_argument("--max-n", type=int)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--samples", type=int)
    v.add_argument("--budget-ms", type=int)
    v.add_argument("--failures-only", action="store_true", help="omit passing instances from the payload")
    return ap


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args, extra = parser.parse_known_args(argv)
    # a graph path after options ("tree count --d 8 FILE") lands in extra
    if extra and len(extra) == 1 and getattr(args, "source", "") is None and not extra[0].startswith("--"):
        args.source = extra[0]
    elif extra:
        parser.error(f"unrecognized arguments: {' '.join(extra)}")
    start = time.perf_counter()

    def elapsed():
        return (time.perf_counter() - start) * 1000

    if args.command == "gen":
        try:
            G = families.generate_family(_family_spec(args))
        except (GraphError, ValueError) as e:
            code = getattr(e, "code", "invalid_argument")
            _emit(_outcome(argv, "error", None, elapsed(), {"code": code, "message": str(e)}), sys.stderr)
            return EXIT_DOMAIN
        sys.stdout.write(render_graph(G))
        return EXIT_OK

    if args.command == "op" and args.render:
        try:
            G, H = load_graph(args.left, lenient=args.lenient), load_graph(args.right, lenient=args.lenient)
            sys.stdout.write(render_graph(build(G, H, args.op)))
            return EXIT_OK
        except (GraphError, CommandError) as e:
            _emit(_outcome(argv, "error", None, elapsed(), {"code": e.code, "message": str(e)}), sys.stderr)
            return EXIT_DOMAIN

    try:
        payload = run_with_budget(prepare(args), args, args.budget_ms)
    except BaseException as e:
        if isinstance(e, (KeyboardInterrupt, SystemExit)):
            raise
        code, message, exit_code, payload = _error_info(e)
        _emit(_outcome(argv, "error", payload, elapsed(), {"code": code, "message": message}), sys.stderr)
        return exit_code

    if getattr(args, "csv", False) and "profile" in payload:
        prof = payload["profile"]
        sys.stdout.write("d,count,method\n")
        for e in prof["entries"]:
            sys.stdout.write(f"{e['size']},{e['count']},{e['method']}\n")
        return EXIT_OK
    _emit(_outcome(argv, "ok", payload, elapsed()), sys.stdout)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
