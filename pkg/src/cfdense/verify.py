"""Verification sweeps comparing closed forms and predictions with exact search.

Each suite returns a ``SuiteReport``. Small sweeps list every instance;
exhaustive sweeps over millions of labeled graphs or trees report per-order
aggregates plus the first failing instance for each check.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

from . import families as F
from . import kernels, solvers, trees
from .graph import Graph
from .operations import cartesian_product
from .predictions import EXACT, GUARANTEED, NA, check_density_preservation


@dataclass(frozen=True)
class VerifyConfig:
    max_n: int | None = None
    seed: int = 0
    samples: int | None = None
    check_density: bool = True


@dataclass
class SuiteReport:
    suite: str
    params: dict
    instances: list[dict] = field(default_factory=list)
    aggregates: list[dict] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def failures(self) -> int:
        return sum(not r["pass"] for r in self.instances) + sum(a.get("failures", 0) for a in self.aggregates)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def check(self, ident: str, expected, computed, ok: bool | None = None) -> bool:
        ok = expected == computed if ok is None else ok
        self.instances.append({"id": ident, "expected": expected, "computed": computed, "pass": bool(ok)})
        return ok

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "params": self.params,
            "passed": self.passed,
            "checked": len(self.instances) + sum(a.get("checked", 0) for a in self.aggregates),
            "failures": self.failures,
            "instances": self.instances,
            "aggregates": self.aggregates,
            "notes": self.notes,
        }


def edge_code_graph(n: int, code: int) -> Graph:
    adj = kernels.adjacency_from_code(n, code)
    return Graph(n, tuple((u, v) for u in range(n) for v in range(u + 1, n) if int(adj[u]) >> v & 1))


def random_connected(n: int, rng: random.Random, p: float = 0.4) -> Graph:
    return F.random_connected_graph(n, p, rng)


# --- path formula -----------------------------------------------------------

def suite_paths(cfg: VerifyConfig) -> SuiteReport:
    max_n = cfg.max_n or 12
    rep = SuiteReport("paths", {"max_n": max_n})
    for n in range(2, max_n + 1):
        P = F.path(n)
        for i in range(1, n + 1):
            rep.check(f"P{n} i={i}", trees.path_count(n, i), solvers.count_cf_sets(P, i))
    return rep


# --- named families ---------------------------------------------------------

def family_value_table(max_n: int = 16) -> list[tuple[str, Graph, str, int]]:
    """(label, graph, variant, known value) rows for the named families."""
    rows = []
    for n in range(2, 9):
        rows.append((f"K{n}", F.complete(n), "Zc", n - 1))
    for n in range(5, 9):
        rows.append((f"W{n}", F.wheel(n), "Zc", 3))
    for k in (2, 3, 4):
        rows.append((f"Q{k}", F.hypercube(k), "Zc", 2 ** (k - 1)))
    for parts in _nonstar_multipartite(9):
        if max(parts) == 1:
            continue  # all parts singletons: this is K_n, covered above
        rows.append((f"K{parts}", F.complete_multipartite(parts), "Zc", sum(parts) - 2))
    for k in (2, 3, 4):
        G = F.diamond_necklace(k)
        for variant, value in (("Z", k + 2), ("Zt", 2 * k), ("Zc", 3 * k - 2)):
            rows.append((f"N{k}", G, variant, value))
    return [r for r in rows if r[1].n <= max_n]


def _nonstar_multipartite(max_n: int) -> list[tuple[int, ...]]:
    """Part-size multisets (nonincreasing) of complete multipartite graphs
    with at most ``max_n`` vertices, excluding stars K_{1,m}."""
    out = []

    def rec(prefix, remaining, cap):
        if len(prefix) >= 2:
            if not (len(prefix) == 2 and min(prefix) == 1):
                out.append(tuple(prefix))
        for p in range(min(cap, remaining), 0, -1):
            rec(prefix + [p], remaining - p, p)

    rec([], max_n, max_n)
    return sorted(out, key=lambda t: (sum(t), t))


def family_density_table(max_n: int = 16) -> list[tuple[str, Graph, dict[str, bool]]]:
    rows = []
    all3 = {"ZF": True, "TF": True, "CF": True}
    for n in range(3, 9):
        rows.append((f"C{n}", F.cycle(n), all3))
    for n in range(2, 8):
        rows.append((f"K{n}", F.complete(n), all3))
    for n in range(5, 8):
        rows.append((f"W{n}", F.wheel(n), all3))
    rows.append(("Q2", F.hypercube(2), all3))
    rows.append(("Q3", F.hypercube(3), all3))
    for parts in _nonstar_multipartite(8):
        rows.append((f"K{parts}", F.complete_multipartite(parts), all3))
    rows.append(("N2", F.diamond_necklace(2), all3))
    rows.append(("N3", F.diamond_necklace(3), all3))
    for n in range(4, 8):
        rows.append((f"S{n}", F.star(n), {"ZF": False, "TF": True, "CF": True}))
    rows.append(("S3", F.star(3), {"CF": False}))
    return [r for r in rows if r[1].n <= max_n]


def suite_families(cfg: VerifyConfig) -> SuiteReport:
    max_n = cfg.max_n or 16
    rep = SuiteReport("families", {"max_n": max_n})
    for label, G, variant, value in family_value_table(max_n):
        rep.check(f"{variant}({label})", value, solvers.forcing_number(G, variant).value)
    for label, G, expect in family_density_table(max_n):
        for variant, dense in expect.items():
            rep.check(f"{variant}-dense({label})", dense, solvers.density(G, variant).dense)
    return rep


# --- trees --------------------------------------------------------------------

def literal_strong_support(T: Graph) -> bool:
    """The characterization read without excluding longer paths."""
    if T.n <= 2:
        return True
    leaves = {v for v in range(T.n) if T.degree(v) == 1}
    return all(len(leaves & set(T.neighbors[v])) != 1 for v in range(T.n))


def pruefer_from_code(code: int, n: int) -> list[int]:
    """Inverse of reading a Prüfer sequence as a base-n integer."""
    digits = []
    for _ in range(max(n - 2, 0)):
        code, d = divmod(code, n)
        digits.append(d)
    return digits[::-1]


@lru_cache(maxsize=None)
def prufer_sweep(n: int) -> tuple[int, int, int, int]:
    return tuple(int(x) for x in kernels.sweep_prufer_trees(n))


def suite_trees_cf_dense(cfg: VerifyConfig) -> SuiteReport:
    max_n = cfg.max_n or 9
    rep = SuiteReport("trees-cf-dense", {"max_n": max_n})
    for n in range(1, max_n + 1):
        count, dense, mismatches, first = prufer_sweep(n)
        expected = n ** (n - 2) if n >= 2 else 1
        agg = {"n": n, "checked": count, "dense": dense, "failures": mismatches + (count != expected)}
        if first >= 0:
            agg["first_failure_pruefer"] = pruefer_from_code(first, n)
        rep.aggregates.append(agg)
    # paths on >= 3 vertices satisfy the strong-support condition only when
    # read literally; the exhaustive oracle above decides them as non-dense
    for n in range(3, max_n + 1):
        P = F.path(n)
        oracle = solvers.density(P, "CF").dense
        rep.check(f"P{n} dense", oracle, trees.is_cf_dense_tree(P))
        if literal_strong_support(P) != oracle:
            rep.notes.append(
                f"P{n}: literal strong-support condition says dense, exhaustive search says not; "
                f"the {math.factorial(n) // 2} labeled copies follow the search"
            )
    return rep


def m_set_checks(T: Graph, rep: SuiteReport, label: str) -> None:
    dec = trees.pendant_decomposition(T)
    for d in range(1, T.n + 1):
        rep.check(f"{label} d={d}", trees.tree_count(T, d, dec), solvers.count_cf_sets(T, d))
    msets = {s.mask for s in trees.enumerate_m_sets(T)}
    minimum = {s.mask for s in solvers.enumerate_minimum_sets(T, "Zc")}
    rep.check(f"{label} M-sets = minimum CF sets", sorted(minimum), sorted(msets))
    missing = 0
    for d in range(dec.mandatory_size, T.n + 1):
        for S in solvers.connected_forcing_sets(T, d):
            if not trees.contains_m_set(T, S, dec):
                missing += 1
    rep.check(f"{label} every CF set contains an M-set", 0, missing)


def suite_tree_counts(cfg: VerifyConfig) -> SuiteReport:
    max_n = cfg.max_n or 14
    samples = cfg.samples or 200
    rep = SuiteReport("tree-counts", {"max_n": max_n, "seed": cfg.seed, "samples": samples})
    for j, T in enumerate(random_tree_corpus(cfg.seed, samples, max_n)):
        m_set_checks(T, rep, f"tree#{j} n={T.n} edges={list(T.edges)}")
    return rep


def random_tree_corpus(seed: int, samples: int, max_n: int = 14, min_n: int = 5) -> list[Graph]:
    """Random non-path trees with ``min_n <= n <= max_n``."""
    rng = random.Random(seed)
    lo = min(min_n, max_n)
    out = []
    while len(out) < samples:
        T = F.random_tree(rng.randint(lo, max_n), rng)
        if not T.is_path():
            out.append(T)
    return out


# --- exhaustive labeled-graph sweep ------------------------------------------

@lru_cache(maxsize=None)
def labeled_sweep(n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    stats, first = kernels.sweep_labeled_graphs(n)
    return tuple(int(x) for x in stats), tuple(int(x) for x in first)


def _sweep_aggregates(rep: SuiteReport, max_n: int, checks: dict[str, int], min_n: int = 1) -> None:
    for n in range(min_n, max_n + 1):
        stats, first = labeled_sweep(n)
        for name, k in checks.items():
            checked = stats[kernels.STAT_CHAIN_CHECKED] if k == kernels.STAT_CHAIN else stats[kernels.STAT_CONNECTED]
            agg = {"n": n, "check": name, "graphs": stats[kernels.STAT_GRAPHS],
                   "checked": checked, "failures": stats[k]}
            if first[k] >= 0:
                agg["first_failure_edges"] = list(edge_code_graph(n, first[k]).edges)
            rep.aggregates.append(agg)


def _random_corpus(cfg: VerifyConfig, n: int, count: int) -> list[Graph]:
    rng = random.Random(cfg.seed)
    return [random_connected(n, rng) for _ in range(count)]


def suite_uniqueness(cfg: VerifyConfig) -> SuiteReport:
    max_n = cfg.max_n or 7
    samples = 200 if cfg.samples is None else cfg.samples
    rep = SuiteReport("uniqueness", {"max_n": max_n, "seed": cfg.seed, "samples": samples})
    _sweep_aggregates(rep, max_n, {"unique sizes within {Zc, n}": kernels.STAT_UNIQUENESS})
    for j, G in enumerate(_random_corpus(cfg, max_n + 1, samples)):
        r = solvers.uniqueness_report(G)
        rep.check(f"random#{j} n={G.n} edges={list(G.edges)}", sorted({r.zc, r.n} & set(r.unique_sizes)),
                  r.unique_sizes, r.consistent)
    return rep


def suite_extremal(cfg: VerifyConfig) -> SuiteReport:
    max_n = cfg.max_n or 7
    samples = 200 if cfg.samples is None else cfg.samples
    rep = SuiteReport("extremal", {"max_n": max_n, "seed": cfg.seed, "samples": samples})
    _sweep_aggregates(rep, max_n, {
        "size 1": kernels.STAT_EXTREMAL_1,
        "size n-2": kernels.STAT_EXTREMAL_NM2,
        "size n-1": kernels.STAT_EXTREMAL_NM1,
        "size n": kernels.STAT_EXTREMAL_N,
    })
    for j, G in enumerate(_random_corpus(cfg, max_n + 1, samples)):
        closed = solvers.extremal_cf_counts(G).by_size()
        brute = {i: solvers.count_cf_sets(G, i) for i in closed}
        rep.check(f"random#{j} n={G.n} edges={list(G.edges)}", brute, closed)
    return rep


def chain_holds(G: Graph) -> tuple[bool, tuple[int, int, int, int]]:
    d = G.min_degree()
    z = solvers.forcing_number(G, "Z").value
    zt = solvers.forcing_number(G, "Zt").value
    zc = solvers.forcing_number(G, "Zc").value
    return d <= z <= zt <= zc, (d, z, zt, zc)


def suite_chain(cfg: VerifyConfig) -> SuiteReport:
    max_n = cfg.max_n or 7
    rep = SuiteReport("chain", {"max_n": max_n, "seed": cfg.seed})
    _sweep_aggregates(rep, max_n, {"delta <= Z <= Zt <= Zc": kernels.STAT_CHAIN})
    seen = set()
    for label, G, _, _ in family_value_table(16):
        if label in seen or G.is_path():
            continue
        seen.add(label)
        ok, values = chain_holds(G)
        rep.check(f"{label}", "delta <= Z <= Zt <= Zc", list(values), ok)
    return rep


def suite_reversal(cfg: VerifyConfig) -> SuiteReport:
    max_n = cfg.max_n or 7
    rep = SuiteReport("reversal", {"max_n": max_n, "seed": cfg.seed})
    _sweep_aggregates(rep, max_n, {
        "reversal is a distinct minimum ZF set": kernels.STAT_REVERSAL,
        "at least two minimum ZF sets": kernels.STAT_FEW_MIN_ZF,
    }, min_n=2)
    return rep


# --- operations ---------------------------------------------------------------

def _operation_checks(rep: SuiteReport, label: str, G: Graph, H: Graph, op: str, density: bool) -> None:
    pred = check_density_preservation(G, H, op, verify=True)
    for v, p in pred.predicted.items():
        if p.kind == NA:
            continue
        computed = pred.verified["values"][v]["computed"]
        if p.kind == EXACT:
            rep.check(f"{label} {v}", p.value, computed)
        else:
            rep.check(f"{label} {v} <= bound", p.value, computed, computed <= p.value)
    if density:
        for v, c in pred.conclusion_density.items():
            if c.status == GUARANTEED:
                rep.check(f"{label} {v}-dense (guaranteed)", True, pred.verified["density"][v]["dense"])


def _describe(G: Graph) -> str:
    return f"n={G.n} edges={list(G.edges)}"


def random_join_operand(rng: random.Random, max_n: int) -> Graph:
    while True:
        G = F.random_graph(rng.randint(1, max_n), rng.choice((0.3, 0.5, 0.7)), rng)
        if G.is_connected() or not G.has_isolated_vertex():
            return G


def suite_join(cfg: VerifyConfig) -> SuiteReport:
    max_n = cfg.max_n or 6
    samples = cfg.samples or 100
    rep = SuiteReport("join", {"max_n": max_n, "seed": cfg.seed, "samples": samples})
    for j, (G, H) in enumerate(join_pairs(cfg.seed, samples, max_n)):
        _operation_checks(rep, f"pair#{j} G: {_describe(G)} H: {_describe(H)}", G, H, "join", cfg.check_density)
    return rep


def join_pairs(seed: int, samples: int = 100, max_n: int = 6) -> list[tuple[Graph, Graph]]:
    rng = random.Random(seed)
    return [(random_join_operand(rng, max_n), random_join_operand(rng, max_n)) for _ in range(samples)]


def _canonical(G: Graph) -> tuple:
    best = None
    for perm in itertools.permutations(range(G.n)):
        key = tuple(sorted((min(perm[u], perm[v]), max(perm[u], perm[v])) for u, v in G.edges))
        if best is None or key < best:
            best = key
    return (G.n, best)


def small_graphs(max_n: int, keep: Callable[[Graph], bool]) -> list[Graph]:
    """One representative per isomorphism class on 1..max_n vertices."""
    out, seen = [], set()
    for n in range(1, max_n + 1):
        pairs = n * (n - 1) // 2
        for code in range(1 << pairs):
            G = edge_code_graph(n, code)
            if not keep(G):
                continue
            key = _canonical(G)
            if key not in seen:
                seen.add(key)
                out.append(G)
    return out


def corona_pool(max_n: int = 4) -> tuple[list[Graph], list[Graph]]:
    gs = small_graphs(max_n, Graph.is_connected)
    hs = small_graphs(max_n, lambda G: G.n >= 2 and not G.has_isolated_vertex())
    return gs, hs


def suite_corona(cfg: VerifyConfig) -> SuiteReport:
    max_n = cfg.max_n or 4
    gs, hs = corona_pool(max_n)
    rep = SuiteReport("corona", {"max_n": max_n, "seed": cfg.seed, "pool_G": len(gs), "pool_H": len(hs)})
    both = {"Zt(H) = Z(H)": 0, "Zt(H) > Z(H)": 0}
    for H in hs:
        z, zt = solvers.forcing_number(H, "Z").value, solvers.forcing_number(H, "Zt").value
        both["Zt(H) = Z(H)" if zt == z else "Zt(H) > Z(H)"] += 1
    rep.notes.append(f"H pool split: {both}")
    for G in gs:
        for H in hs:
            _operation_checks(rep, f"G: {_describe(G)} H: {_describe(H)}", G, H, "corona", cfg.check_density)
    return rep


def suite_cartesian(cfg: VerifyConfig) -> SuiteReport:
    max_n = cfg.max_n or 5
    samples = cfg.samples or 50
    rep = SuiteReport("cartesian", {"max_n": max_n, "seed": cfg.seed, "samples": samples})
    for r in range(2, max_n + 1):
        for s in range(r, max_n + 1):
            grid = cartesian_product(F.path(r), F.path(s))
            rep.check(f"Zc(P{r} x P{s})", r, solvers.forcing_number(grid, "Zc").value)
    for j, (G, H) in enumerate(cartesian_pairs(cfg.seed, samples)):
        _operation_checks(rep, f"pair#{j} G: {_describe(G)} H: {_describe(H)}", G, H, "cartesian",
                          cfg.check_density)
    return rep


def cartesian_pairs(seed: int, samples: int = 50, max_n: int = 4) -> list[tuple[Graph, Graph]]:
    rng = random.Random(seed)
    out = []
    for _ in range(samples):
        G = F.random_graph(rng.randint(1, max_n), rng.choice((0.4, 0.7)), rng)
        H = F.random_graph(rng.randint(1, max_n), rng.choice((0.4, 0.7)), rng)
        if G.has_isolated_vertex() and H.has_isolated_vertex():
            # the product would have an isolated vertex and no total forcing set
            G = F.random_connected_graph(G.n, 0.6, rng)
        out.append((G, H))
    return out


SUITES: dict[str, Callable[[VerifyConfig], SuiteReport]] = {
    "paths": suite_paths,
    "families": suite_families,
    "trees-cf-dense": suite_trees_cf_dense,
    "tree-counts": suite_tree_counts,
    "uniqueness": suite_uniqueness,
    "extremal": suite_extremal,
    "join": suite_join,
    "corona": suite_corona,
    "cartesian": suite_cartesian,
    "chain": suite_chain,
    "reversal": suite_reversal,
}


def run_suite(name: str, cfg: VerifyConfig | None = None) -> SuiteReport:
    if name not in SUITES:
        raise KeyError(name)
    return SUITES[name](cfg or VerifyConfig())
